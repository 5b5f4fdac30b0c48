//! Reference values computed in extended precision with mpmath
//! (`tools/gen_reference_values.py`); used by the unit tests.
#![allow(clippy::excessive_precision)]

// (x, i0e, i1e, k0e, k1e)
pub const SCALED_KERNEL_REFS: [(f64, f64, f64, f64, f64); 16] = [
    (1.0000000000000000209e-8, 0.99999999000000007500, 4.9999999500000004171e-9, 18.536612444976901911, 100000000.99999990772),
    (0.00010000000000000000479, 0.99990000749958335156, 0.000049995000312485419609, 9.3272045872745338853, 10000.999558638937370),
    (0.031250000000000000000, 0.96946987812707235871, 0.015146118029601460871, 3.6965159033840396049, 32.949979008674279732),
    (0.50000000000000000000, 0.64503527044915006811, 0.15642080318487169714, 1.5241093857739095300, 2.7310097082117857054),
    (1.0000000000000000000, 0.46575960759364043650, 0.20791041534970844887, 1.1444630798068950147, 1.6361534862632582465),
    (1.9990234375000000000, 0.30859941390761675495, 0.21528333895500251042, 0.84175568925001465522, 1.0337942009893714263),
    (2.0000000000000000000, 0.30850832255367103953, 0.21526928924893765916, 0.84156821507077141792, 1.0334768470686885732),
    (2.0009765625000000000, 0.30841730639068259373, 0.21525522254048023168, 0.84138086765504345347, 1.0331597676755662850),
    (4.7500000000000000000, 0.18864068614599085420, 0.16737017083814558350, 0.56141651362567387115, 0.61790454845133540169),
    (7.9990234375000000000, 0.14344085429124570491, 0.13414979711971401963, 0.43664892527981968163, 0.46317972826770096969),
    (8.0000000000000000000, 0.14343178185685031071, 0.13414249329269817831, 0.43662301860158611262, 0.46314909287049610585),
    (8.0009765625000000000, 0.14342271114933545572, 0.13413519062919016751, 0.43659711654055541782, 0.46311846349685260059),
    (13.500000000000000000, 0.10962924801942035718, 0.10548737529075768678, 0.33807293867774346101, 0.35037773048777256195),
    (42.000000000000000000, 0.061743855904784958500, 0.061004326474599376731, 0.19282252672931189370, 0.19510468306107416572),
    (250.00000000000000000, 0.025243969387054753633, 0.025193430757117305262, 0.079227001484703988536, 0.079385297663557711419),
    (700.00000000000000000, 0.015081295651531357587, 0.015070519444716846949, 0.047362369454613572112, 0.047396187653494544137),
];

pub const BESSEL_J_REFS: [(u32, f64, f64); 33] = [
    (0, 2.4048255576957728863, -6.1087652597367303971e-17),
    (1, 3.8317059702075124683, -6.1498073569949060914e-17),
    (0, 9.9999999999999995475e-7, 0.99999999999975000000),
    (1, 9.9999999999999995475e-7, 4.9999999999993747737e-7),
    (0, 0.50000000000000000000, 0.93846980724081290423),
    (1, 0.50000000000000000000, 0.24226845767487388638),
    (0, 12.000000000000000000, 0.047689310796833536624),
    (1, 12.000000000000000000, -0.22344710449062761237),
    (0, 24.968750000000000000, 0.092300754577317108636),
    (1, 25.031250000000000000, -0.12212663732802638282),
    (0, 100.00000000000000000, 0.019985850304223122424),
    (1, 19999.000000000000000, -0.0051820814260811163442),
    (2, 1.5000000000000000000, 0.23208767214421472724),
    (5, 2.0000000000000000000, 0.0070396297558716854842),
    (5, 30.000000000000000000, -0.14324029551207707699),
    (16, 4.0000000000000000000, 2.4716913110218083051e-9),
    (16, 16.000000000000000000, 0.17745319348053966533),
    (16, 80.000000000000000000, 0.058584780099475819523),
    (64, 10.000000000000000000, 2.9049360287291092641e-45),
    (64, 63.500000000000000000, 0.099176099046424479711),
    (64, 64.500000000000000000, 0.12435982158540959418),
    (64, 71.000000000000000000, 0.042852583481632616304),
    (64, 500.00000000000000000, 0.028280510329068469874),
    (128, 100.00000000000000000, 4.5943874113365107081e-8),
    (128, 135.00000000000000000, 0.093625652918521291947),
    (300, 290.00000000000000000, 0.0076770342561412528577),
    (512, 80.000000000000000000, 2.2636372826180517601e-348),
    (512, 513.00000000000000000, 0.062266285526380106932),
    (512, 530.00000000000000000, -0.046595180317051857127),
    (512, 5000.0000000000000000, 0.0051691555896183591086),
    (512, 19999.000000000000000, 0.0035379759439140701357),
    (32, 3000.0000000000000000, -0.0097693690816497115712),
    (7, 14000.000000000000000, -0.0018601845659545772207),
];

pub const BESSEL_ZERO_REFS: [(u32, u32, f64); 14] = [
    (0, 1, 2.4048255576957727686),
    (0, 2, 5.5200781102863106496),
    (0, 5, 14.930917708487785948),
    (0, 100, 313.37426607752784472),
    (1, 1, 3.8317059702075123156),
    (1, 7, 22.760084380592771898),
    (2, 1, 5.1356223018406825563),
    (16, 1, 21.085146113064718938),
    (64, 1, 71.681167819458038968),
    (64, 2, 77.765917841937025893),
    (64, 129, 500.91718829662788892),
    (128, 1, 137.55737418626120199),
    (512, 1, 526.97518992885530106),
    (512, 64, 843.78460688282306780),
];

// (n, x, I_{n}(x)/I_{n-1}(x))
pub const I_RATIO_REFS: [(u32, f64, f64); 11] = [
    (1, 1.0000000000000000000, 0.44638996589653450705),
    (1, 0.062500000000000000000, 0.031234751138379831819),
    (8, 1.0000000000000000000, 0.062284332675995444613),
    (33, 1.0000000000000000000, 0.015148140606166882745),
    (32, 32.000000000000000000, 0.41554694429996504786),
    (64, 100.00000000000000000, 0.54832914971433527243),
    (64, 16384.000000000000000, 0.99613166037496690176),
    (128, 11.300000000000000711, 0.044055614200142415111),
    (512, 45.000000000000000000, 0.043860935482159456537),
    (512, 20000.000000000000000, 0.97475136399671622188),
    (2, 3.7000000000000001776, 0.63467681670708474549),
];

// (n, x, K_{n}(x)/K_{n-1}(x))
pub const K_RATIO_REFS: [(u32, f64, f64); 6] = [
    (1, 1.0000000000000000000, 1.4296253982604017580),
    (2, 1.0000000000000000000, 2.6994839355937723439),
    (64, 10.000000000000000000, 12.680119121289951997),
    (64, 16384.000000000000000, 1.0038831243163409587),
    (128, 0.0010000000000000000208, 254000.00000396824868),
    (9, 2.2000000000000001776, 7.4256272638486415789),
];

// (n, x, I_n(x) K_n(x))
pub const IK_PRODUCT_REFS: [(u32, f64, f64); 7] = [
    (0, 1.0000000000000000000, 0.53304467495626862019),
    (3, 0.50000000000000000000, 0.16415011926813484545),
    (16, 20.000000000000000000, 0.019519560305586738212),
    (64, 9.9999999999999995475e-7, 0.0078124999999999990461),
    (64, 64.000000000000000000, 0.0055242085110848683545),
    (128, 4000.0000000000000000, 0.00012493605007917945876),
    (512, 100.00000000000000000, 0.00095845249986443501822),
];

// (n, kappa, r, R, I_n(kappa r) K_n(kappa R))
pub const IK_SPLIT_REFS: [(u32, f64, f64, f64, f64); 5] = [
    (64, 64.000000000000000000, 8.0000000000000000000, 16.000000000000000000, 4.0900986434180340797e-227),
    (64, 1024.0000000000000000, 15.500000000000000000, 16.000000000000000000, 1.3518078914189560323e-227),
    (0, 1.0000000000000000000, 0.50000000000000000000, 16.000000000000000000, 3.7215661119746915246e-8),
    (16, 2.0000000000000000000, 3.0000000000000000000, 9.0000000000000000000, 1.1230433938854502585e-11),
    (8, 40.000000000000000000, 11.000000000000000000, 16.000000000000000000, 1.2745985197684874813e-90),
];

// (n, kappa, alpha, r, int_0^r I_n(k s) J_n(a s) s ds, int_0^r K_n(k s) J_n(a s) s ds)
pub const TABLED_INTEGRAL_REFS: [(u32, f64, f64, f64, f64, f64); 4] = [
    (2, 3.0000000000000000000, 1.5000000000000000000, 2.0000000000000000000, 11.672526704735009796, 0.021720832350047599271),
    (0, 1.0000000000000000000, 2.4048255576957728863, 1.0000000000000000000, 0.23302199927177278297, 0.22491375423308303117),
    (5, 2.5000000000000000000, 1.1000000000000000888, 6.0000000000000000000, 114140.14387943861975, 0.0022105014691054550621),
    (8, 0.69999999999999995559, 2.0000000000000000000, 10.000000000000000000, 1.0406364084205403951, 989.04990838575768034),
];

// order-0 Fourier-Bessel coefficients of the m=2 gaussian bump on [0,16]
pub const FOURIER_BESSEL_COEFF_REFS: [f64; 8] = [
    0.038954761964655081749,
    0.086372917119396712566,
    0.12414369623085305242,
    0.14825626555103909478,
    0.15661713996239396418,
    0.14917527767448534082,
    0.12778112229033331360,
    0.095772641624814986806,
];
