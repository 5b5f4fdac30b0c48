//! Shared helpers and extended-precision reference data for the
//! integration suites (generated by `tools/gen_reference_values.py`).
#![allow(dead_code, clippy::excessive_precision)]

// (n, kappa, alpha, r, R, integral_0^R G_n(kappa,r,s) J_n(alpha s) ds)
pub const GREEN_QUAD_REFS: [(u32, f64, f64, f64, f64, f64); 51] = [
    (2, 3.0000000000000000000, 1.2839055754601706391, 2.0000000000000000000, 4.0000000000000000000, -0.042755035883909636959),
    (8, 1.6659468959155832035, 1.3595881248996432656, 11.013150604431197976, 11.796053449695673265, 0.042147315866863363686),
    (0, 0.54001078008024872013, 0.42743810308111052863, 7.1800802900528388761, 12.914333257835046709, 0.61331710126323115135),
    (6, 1.5457225170854016483, 1.4318098656722680903, 6.9255429937853358879, 14.192379659310017104, -0.0010266186491669249614),
    (8, 0.13151998149397456372, 2.7776510694408168938, 10.504826670945579536, 10.636922684801636052, 0.037347337610935607589),
    (8, 1.9302604406805634607, 1.7439783673762611326, 6.0169129017530060821, 15.061433749716696795, -0.042213887514468264712),
    (4, 2.1984349312219761963, 2.6099642248460086396, 1.0696963342520915408, 9.2028156156769789220, -0.0090762027735458728006),
    (1, 1.6791995194206008613, 0.36804722966608623057, 5.6794715882083632863, 10.410908332835049350, -0.19264612863775589916),
    (5, 0.78266025883558354437, 1.2467381774134339097, 1.2466097253332337758, 15.223833054152052568, -0.00098474780742712168378),
    (6, 2.2864115126085429175, 2.0948419192641490463, 8.5475637599600862160, 12.802947915436247328, 0.015140558333069250636),
    (8, 1.4719542258224900255, 7.9490662039614486445, 0.39405793821667367549, 2.4599790628554552008, -0.000010422587196758336899),
    (2, 1.6554732494458634928, 1.9844812448318725993, 5.3441529685449857823, 5.8553544924701492747, -0.040106155751585401817),
    (4, 4.5839014083986961978, 4.5530531391521651741, 2.1071571981268211182, 3.8690446852735709271, 0.0063172253897611568053),
    (0, 1.4483721823407884610, 0.46361510471990719443, 3.1672656786711850252, 11.906596774109123871, -0.22890374286665010904),
    (6, 1.2315221884509259809, 1.3721363800464936047, 8.8501342149973485363, 12.392222752114374629, 0.068849623623647569365),
    (8, 1.9798363159828780145, 1.1298199123175004845, 6.9140529370199068637, 14.194982772069248966, -0.039451668476864109855),
    (2, 2.1796766923043540132, 1.6927388751541212083, 1.2951058607486671814, 8.7408353405980072637, -0.051669563754108373529),
    (0, 0.49853571084733716567, 3.8278915143120102370, 2.4784774751642535406, 4.7208924026047922595, 0.036865823511986256488),
    (2, 3.6958782299812962258, 1.0820976192921049638, 0.28396053548316002590, 7.7786365946413624783, -0.00078955808318998091985),
    (0, 2.7320956037387009729, 0.78908954704773059120, 8.7193085257970484037, 10.966724809988598111, -0.036781349180626705127),
    (1, 0.61478483429409558347, 1.2148290732114115624, 5.3754665000001917718, 13.557981459348329878, 0.077341686287948779342),
    (4, 3.6006879375246647612, 2.5268732216080723125, 5.9850720411820033107, 8.2421756575932896283, 0.0071435850713443673478),
    (4, 3.2613105759012808171, 2.9079218568487349443, 1.0652350391079512537, 2.6095413866200520836, -0.0076246161634718285125),
    (7, 1.6076219466109153977, 7.8816277570549482881, 2.2850394718741346978, 2.3202799467549417578, -0.0036000884230516042005),
    (1, 0.43571443742719984105, 0.57092788937452393621, 1.6433048760403783373, 12.288043377074284734, -0.80874224553297305457),
    (1, 2.7361913985408339300, 1.4531731738042249625, 4.1026903884693837199, 7.0008642593021859213, 0.029585234232250326596),
    (7, 3.3116038642961735938, 4.7504773671155855744, 0.88426588275657325156, 2.3337380988253295655, -0.00060442063673797667152),
    (2, 1.8819837503675214130, 1.4344603426716563204, 6.3636353195768942115, 8.1004966303267167405, -0.031155199490411082573),
    (7, 8.2521329282768043356, 7.1614945181492418091, 1.6028638577129465936, 3.0219308225402738977, 0.00067450159675491375357),
    (1, 1.3723214058772679191, 1.1161740298254083482, 4.4126775256814481097, 6.2853878359031476464, 0.10518190364403499060),
    (8, 5.7117689772192221653, 3.8215962559009829188, 3.2052285672016522788, 5.1168504262590817078, 0.00010121731162858473074),
    (8, 7.2608391897888662214, 10.652283988946243770, 1.9276691478684562231, 2.1540144025154202012, 0.00096580849964879038708),
    (3, 3.3411229293636681703, 5.6207081238191667052, 2.5731431291442912190, 3.4531974973371637461, 0.0047160685857298379596),
    (0, 3.5537403826463820344, 1.0891544486153146323, 0.72715941815660245506, 7.9453634183038417405, -0.061470113859007501161),
    (4, 2.8664440145622442913, 1.4089120124819647390, 1.1176785209434796364, 7.8533715309939005067, -0.0013848099964537361888),
    (3, 5.7636497050093868921, 4.4599097296395249612, 1.4795629416901650011, 2.9182655055106678788, 0.0011989123758782196419),
    (4, 0.092665259728803725525, 1.5526059677181100070, 13.009271020286332643, 13.414178091542483529, -0.19928619392108169243),
    (3, 1.1693251328632860986, 1.8878730906652918135, 10.165822980100339024, 11.961995594283418853, -0.0045787123580606962196),
    (8, 6.4220880818321788297, 6.5677267865021138757, 0.89326945889667752621, 3.4936247925280889959, -0.00058802571093206465845),
    (5, 1.0333173834108924094, 2.5793253414957368937, 0.63014949349436333303, 4.7836556323336294483, -0.00034204900685840821414),
    (0, 0.094500101449141338250, 6.1698040132040472817, 0.22924051848173768176, 2.9289526748721503857, 0.11422955966179861634),
    (5, 1.1306484420176399208, 1.0120331813135237543, 3.6814896205779121807, 8.6671899478388585436, -0.044387436821407977693),
    (5, 7.0022756589507189062, 6.2858023768760213396, 3.3269133649275532960, 3.5346004478752455213, -0.0021033787826444319094),
    (6, 0.43478895588761484747, 0.68506508400302389183, 3.9452368869931895290, 14.503891318118654397, -0.0098781856256767352586),
    (3, 0.77418381324308904734, 2.9256400588042171210, 3.6633442642802092060, 5.5452707216996843798, -0.016097959716030556849),
    (5, 0.43081631321384550315, 3.2420550931659126786, 6.5032114764679516128, 7.8438954377513727678, -0.0042405826041188492224),
    (5, 0.36301266544646926260, 2.6609880536530323536, 6.8723190383490964095, 8.3494549575524921181, 0.0015931316914120392205),
    (1, 1.3342993724625349383, 0.24885764581819493328, 10.829940568769433895, 15.397180012732249565, -0.24056734503559361639),
    (1, 3.7943476273942846611, 3.0341499512850741943, 3.6462247967780814228, 4.3912437256672660624, 0.0081277399441113580476),
    (8, 0.82934793741644441400, 1.8779771347141021414, 1.3828438476143678493, 15.732704687853665604, -0.000039359492952292559019),
    (7, 1.2163910729182088044, 2.8812605578096251074, 6.0332306560156938602, 9.7843245669230753947, -0.015056213553698127516),
];

