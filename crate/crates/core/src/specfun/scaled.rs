//! Exponentially scaled modified Bessel functions of orders zero and one.
//!
//! The library exposes `I_n(x) e^{-x}` and `K_n(x) e^{+x}`; both stay in
//! range for every representable positive argument. The four kernels here
//! anchor every ratio and product in the crate, so they carry the tightest
//! accuracy requirement (5e-15 relative on `[1e-8, 700]`).
//!
//! Each kernel is evaluated from Chebyshev expansions fitted in extended
//! precision (see `tools/gen_chebyshev_tables.py`): a small-argument
//! expansion and a large-argument expansion in an inverse variable. The
//! `K` kernels below `x = 2` use the classical decomposition
//! `K_0 = A(x^2) - log(x/2) I_0` and `K_1 = B(x^2)/x + log(x/2) I_1`
//! with `A`, `B` analytic.

/// Clenshaw evaluation of `c[0]/2 + sum_{k>=1} c[k] T_k(t)`.
fn clenshaw(c: &[f64], t: f64) -> f64 {
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &ck in c.iter().skip(1).rev() {
        let b = 2.0 * t * b1 - b2 + ck;
        b2 = b1;
        b1 = b;
    }
    t * b1 - b2 + 0.5 * c[0]
}

/// `I_0(x) e^{-x}` for `x >= 0`; lies in `(0, 1]`.
pub fn i0_scaled(x: f64) -> f64 {
    assert!(x >= 0.0 && x.is_finite(), "i0_scaled: x must be >= 0, got {x}");
    if x < 1e-4 {
        // leading series keeps the value exactly 1 at the origin and
        // inside (0, 1] for tiny arguments
        1.0 - x + 0.75 * x * x
    } else if x <= 8.0 {
        clenshaw(&I0E_SMALL, 0.25 * x - 1.0)
    } else {
        clenshaw(&I0E_LARGE, 16.0 / x - 1.0) / x.sqrt()
    }
}

/// `I_1(x) e^{-x}` for `x >= 0`; vanishes linearly at the origin.
pub fn i1_scaled(x: f64) -> f64 {
    assert!(x >= 0.0 && x.is_finite(), "i1_scaled: x must be >= 0, got {x}");
    if x < 1e-4 {
        0.5 * x * (1.0 - x + 0.625 * x * x)
    } else if x <= 8.0 {
        x * clenshaw(&I1E_SMALL, 0.25 * x - 1.0)
    } else {
        clenshaw(&I1E_LARGE, 16.0 / x - 1.0) / x.sqrt()
    }
}

/// `K_0(x) e^{+x}` for `x > 0`; positive and monotonically decreasing.
pub fn k0_scaled(x: f64) -> f64 {
    assert!(x > 0.0 && x.is_finite(), "k0_scaled: x must be > 0, got {x}");
    if x <= 2.0 {
        let a = clenshaw(&K0_SMALL, 0.5 * x * x - 1.0);
        let i0 = i0_scaled(x) * x.exp();
        (a - (0.5 * x).ln() * i0) * x.exp()
    } else {
        clenshaw(&K0E_LARGE, 4.0 / x - 1.0) / x.sqrt()
    }
}

/// `K_1(x) e^{+x}` for `x > 0`.
pub fn k1_scaled(x: f64) -> f64 {
    assert!(x > 0.0 && x.is_finite(), "k1_scaled: x must be > 0, got {x}");
    if x <= 2.0 {
        let b = clenshaw(&K1_SMALL, 0.5 * x * x - 1.0);
        let i1 = i1_scaled(x) * x.exp();
        (b / x + (0.5 * x).ln() * i1) * x.exp()
    } else {
        clenshaw(&K1E_LARGE, 4.0 / x - 1.0) / x.sqrt()
    }
}

const I0E_SMALL: [f64; 34] = [
    0.67679527440947608500,
    -0.30468267234319839868,
    0.17162090152220877535,
    -0.094901097048047644421,
    0.049305284239670708488,
    -0.023737414805899468816,
    0.010546460394594998318,
    -0.0043243099950505759443,
    0.0016394756169413357984,
    -0.00057637557453858236588,
    0.00018850288509584165573,
    -0.000057541950100821037040,
    0.000016448448070728897089,
    -4.4167383584587505636e-6,
    1.1173875391201037182e-6,
    -2.6707938539406117339e-7,
    6.0469950225419189493e-8,
    -1.3000250099862480421e-8,
    2.6598237246823866503e-9,
    -5.1897956016352629067e-10,
    9.6758090353732369122e-11,
    -1.7268262914415557072e-11,
    2.9550526631296398346e-12,
    -4.8564467831119294609e-13,
    7.6761854986049356169e-14,
    -1.1685332877993451681e-14,
    1.7153912855551330306e-15,
    -2.4312798465479546936e-16,
    3.3307945188222380978e-17,
    -4.4153416464793393795e-18,
    5.6691780069214961571e-19,
    -7.0571006924572933671e-20,
    8.5245494181287008141e-21,
    -1.0000528902334115536e-21,
];

const I0E_LARGE: [f64; 33] = [
    0.80449041101410883161,
    0.0033691164782556940899,
    0.000068897583469168239843,
    2.8913705208347564830e-6,
    2.0489185894690637418e-7,
    2.2666689904981780646e-8,
    3.3962320257083863452e-9,
    4.9406023882249695891e-10,
    1.1889147107846438342e-11,
    -3.1499165279632413645e-11,
    -1.3215811840447713119e-11,
    -1.7941785315068061178e-12,
    7.1801244513836662337e-13,
    3.8527783827421427011e-13,
    1.5400862175214098269e-14,
    -4.1505693472872220866e-14,
    -9.5548466988283076487e-15,
    3.8116806693526224207e-15,
    1.7725601330565263836e-15,
    -3.4254856196772191346e-16,
    -2.8276239805165834849e-16,
    3.4612228676974610931e-17,
    4.4656214202967599990e-17,
    -4.8305044859441820713e-18,
    -7.2331804878747539546e-18,
    9.9214754121736985989e-19,
    1.1936508908459820855e-18,
    -2.4887098371508072357e-19,
    -1.9384264541609059290e-19,
    6.4446566973734438688e-20,
    2.8860515962892243265e-20,
    -1.6019549071749718071e-20,
    -3.2708150105923147210e-21,
];

const I1E_SMALL: [f64; 33] = [
    0.25258718644363365482,
    -0.17641651835783405515,
    0.10264365868984709538,
    -0.052945981208094991427,
    0.024726449030626516828,
    -0.010564084894626198156,
    0.0041564229443128881567,
    -0.0015135724506312531490,
    0.00051228595616857577290,
    -0.00016176081582589674559,
    0.000047815651075500542264,
    -0.000013273163656039435828,
    3.4702513081376784767e-6,
    -8.5687202646954547407e-7,
    2.0032947535521352623e-7,
    -4.4450591287963280807e-8,
    9.3815373864957717839e-9,
    -1.8872497517228292879e-9,
    3.6255902815521170370e-10,
    -6.6634897235020277422e-11,
    1.1736186298890901631e-11,
    -1.9839743977649437152e-12,
    3.2237933659455747098e-13,
    -5.0421855047279116871e-14,
    7.6006842947354069341e-15,
    -1.1055969477353863080e-15,
    1.5536319577362004689e-16,
    -2.1114212143581660782e-17,
    2.7779141127610463705e-18,
    -3.5415817725421362052e-19,
    4.3793027566550709946e-20,
    -5.2567299825746412469e-21,
    6.1303280402951703156e-22,
];

const I1E_LARGE: [f64; 33] = [
    0.77857623501828012047,
    -0.0097610974913614684078,
    -0.00011058893876262371629,
    -3.8825648088776903935e-6,
    -2.5122362378702089253e-7,
    -2.6314688468895195068e-8,
    -3.8353803859642370220e-9,
    -5.5897434621965838069e-10,
    -1.8974958123505412345e-11,
    3.2526035830154882386e-11,
    1.4125807436613781332e-11,
    2.0356285441470895072e-12,
    -7.1985517762459085121e-13,
    -4.0835511110921973182e-13,
    -2.1015418427726643130e-14,
    4.2724400167119513543e-14,
    1.0420276984128802764e-14,
    -3.8144030724370078048e-15,
    -1.8803547755107824485e-15,
    3.3082023109209282827e-16,
    2.9626289976459501391e-16,
    -3.2095259219934239588e-17,
    -4.6503053684893583256e-17,
    4.4143483230717079499e-18,
    7.5172963108421048054e-18,
    -9.3141788673268833757e-19,
    -1.2421932751948909561e-18,
    2.4142767194548484690e-19,
    2.0269443840532851790e-19,
    -6.3942671882690977870e-20,
    -3.0498124523730958961e-20,
    1.6128418516514802251e-20,
    3.5609139643099250544e-21,
];

const K0_SMALL: [f64; 12] = [
    -0.53532739323390276872,
    0.34428989992462848689,
    0.035979936515361501627,
    0.0012646154114469259234,
    0.000022862121031194517861,
    2.5347910790261494573e-7,
    1.9045163772202088590e-9,
    1.0349695257633624585e-11,
    4.2598161427910825765e-14,
    1.3744654358807508969e-16,
    3.5708965285083735910e-19,
    7.6316436601164373767e-22,
];

const K0E_LARGE: [f64; 30] = [
    2.4403030820659554547,
    -0.031448101311964500543,
    0.0015698838857300533749,
    -0.00012849549581627802638,
    0.000013949813718876499364,
    -1.8317555227191194848e-6,
    2.7668136394450150761e-7,
    -4.6604898976879476656e-8,
    8.5740340174142260858e-9,
    -1.6975345093890615156e-9,
    3.5773972814003284472e-10,
    -7.9574892444773970377e-11,
    1.8559491149549265550e-11,
    -4.5145978833745191751e-12,
    1.1403405882073442347e-12,
    -2.9800969231481783548e-13,
    8.0328907750683743694e-14,
    -2.2275133267462963604e-14,
    6.3400764762766459661e-15,
    -1.8485933779209071694e-15,
    5.5120559994043333649e-16,
    -1.6782311257549006383e-16,
    5.2103917776435541125e-17,
    -1.6475805939842632815e-17,
    5.3004337711773357710e-18,
    -1.7331712005821000278e-18,
    5.7551092028827293794e-19,
    -1.9390956053183554660e-19,
    6.6246105345361470341e-20,
    -2.2932197170560117732e-20,
];

const K1_SMALL: [f64; 13] = [
    1.5253002273389477705,
    -0.35315596077654487567,
    -0.12261118082265714823,
    -0.0069757238596398643502,
    -0.00017302889575130520630,
    -2.4334061415659682350e-6,
    -2.2133876307347258558e-8,
    -1.4114883926335277611e-10,
    -6.6669016941993290061e-13,
    -2.4274498505193659339e-15,
    -7.0238634793862875972e-18,
    -1.6543275155100994675e-20,
    -3.2338347459944491990e-23,
];

const K1E_LARGE: [f64; 30] = [
    2.7206261904844426694,
    0.10392373657681723844,
    -0.0028578168596227793868,
    0.00019521551847135163111,
    -0.000019361979741660829600,
    2.4064849478372171171e-6,
    -3.5019606030878125421e-7,
    5.7410841254500492923e-8,
    -1.0345762465678097027e-8,
    2.0150497551970346161e-9,
    -4.1903547593419255842e-10,
    9.2183151876053141258e-11,
    -2.1299678384277910216e-11,
    5.1396396734823435404e-12,
    -1.2891739609498229352e-12,
    3.3484196660522431201e-13,
    -8.9767051820101460692e-14,
    2.4771544242195986813e-14,
    -7.0198370892147688513e-15,
    2.0387031662398608799e-15,
    -6.0570472706430178228e-16,
    1.8380935752430454256e-16,
    -5.6894628491936483743e-17,
    1.7940510478863572914e-17,
    -5.7567444820733024503e-18,
    1.8778651901623267401e-18,
    -6.2216452873526091852e-19,
    2.0919125269831136552e-19,
    -7.1327129083411020671e-20,
    2.4645751417354729461e-20,
];
