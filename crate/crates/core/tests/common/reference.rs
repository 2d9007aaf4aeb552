#![allow(clippy::excessive_precision)]
//! Values frozen from a 40-digit mpmath run (`tests/oracles/generate.py`).

use num_complex::Complex64 as C64;

const fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// (z, Ai, Ai′, A_−, A_−′)
pub const AIRY: &[(C64, C64, C64, C64, C64)] = &[
    (c(0.00000000000000000e+00, 0.00000000000000000e+00), c(3.55028053887817219e-01, 0.00000000000000000e+00), c(-2.58819403792806824e-01, 0.00000000000000000e+00), c(3.55028053887817219e-01, 0.00000000000000000e+00), c(1.29409701896403412e-01, -2.24144178676913192e-01)),
    (c(1.00000000000000000e+00, 0.00000000000000000e+00), c(1.35292416312881414e-01, 0.00000000000000000e+00), c(-1.59147441296793202e-01, 0.00000000000000000e+00), c(5.56652857257179723e-01, -2.43272564005050068e-01), c(3.63969742535600937e-01, -3.02021846903351709e-01)),
    (c(-1.00000000000000000e+00, 0.00000000000000000e+00), c(5.35560883292352075e-01, 0.00000000000000000e+00), c(-1.01605671166452097e-02, 0.00000000000000000e+00), c(1.78922411438897533e-01, 2.05905317727968773e-01), c(2.53966028753267958e-01, -1.52493561225633872e-01)),
    (c(2.50000000000000000e+00, 1.00000000000000000e+00), c(-1.91208927137838272e-03, -1.80329057653492060e-02), c(-1.87920860963515426e-03, 3.10276242841243492e-02), c(1.56301731850375258e+00, 2.17664871897620404e+00), c(1.53703649619553739e+00, 3.89830133376310473e+00)),
    (c(3.00000000000000000e+00, 2.00000000000000000e+00), c(-9.67720105861023978e-03, 5.52468911173270572e-03), c(2.09900852451602449e-02, -5.34746569557464566e-03), c(-3.59735905071294670e+00, 1.11206830807656964e+00), c(-6.96677748309316769e+00, -1.54070464491995851e-01)),
    (c(-7.29999999999999982e+00, 0.00000000000000000e+00), c(3.35770370515147298e-01, 0.00000000000000000e+00), c(-1.80095804483293653e-01, 0.00000000000000000e+00), c(1.14631984126506242e-01, 1.27674306909641377e-01), c(3.49010796500229481e-01, -3.05479838507844992e-01)),
    (c(5.71057816281788799e+00, 2.41439372231363336e+00), c(3.38494174195797640e-05, 1.33422073628518858e-05), c(-7.74246868107133189e-05, -4.92983610418649376e-05), c(3.98772142035460263e+02, -7.82873500010718772e+02), c(1.35877185069852021e+03, -1.67658911567296946e+03)),
    (c(1.99296764962170481e+00, 5.12621497281974481e+00), c(-9.44543097185731484e-01, -8.95214408679430695e-01), c(6.97806346438128666e-01, 2.96072770458027446e+00), c(3.10979003021717881e-01, -1.24080292308328755e+00), c(-2.23374227363298505e+00, 2.14322856291842490e+00)),
    (c(1.20000000000000000e+01, -5.00000000000000000e+00), c(2.10018978476420280e-13, -7.87272547116012575e-13), c(-1.95202742895889706e-13, 2.94428859338803736e-12), c(1.49993655418785019e+10, 2.25561112468718300e+10), c(6.88838223628703918e+10, 6.86238783459782257e+10)),
    (c(-1.50000000000000000e+01, 1.00000000000000000e+00), c(6.76625339052378383e+00, 1.33991889606926140e+00), c(4.43501113487867915e+00, -2.63418146407920979e+01), c(2.22083744153202600e+00, 6.52740348830695805e+00), c(2.50388402119870044e+01, -9.33771912465068965e+00)),
    (c(0.00000000000000000e+00, 2.50000000000000000e+01), c(-4.58505024900121081e+24, -1.79205046256843248e+24), c(9.89289418570811553e+24, 2.25005076636749717e+25), c(-7.40563899052688704e+23, -4.86679522454743065e+24), c(-1.45395641419349174e+25, 1.98177515136120814e+25)),
    (c(-3.00000000000000000e+01, 0.00000000000000000e+00), c(-8.79681884568421640e-02, 0.00000000000000000e+00), c(1.22862060263748507e+00, 0.00000000000000000e+00), c(-1.19180423987924541e-01, 1.80203925858804168e-02), c(9.77091905377106829e-02, 6.52932008205424630e-01)),
    (c(-3.20457446218773470e+01, 2.39388857641582611e+01), c(6.71143513059141707e+57, 1.41942312773518413e+59), c(8.38042656119346135e+59, -3.22615191261739175e+59), c(-1.19569931168487664e+59, 7.67834297057027112e+58), c(6.98414279339114615e+59, 5.64458634023470659e+59)),
    (c(8.90000000000000036e+00, 0.00000000000000000e+00), c(3.34206104251870005e-09, 0.00000000000000000e+00), c(-1.00621099218369127e-08, 0.00000000000000000e+00), c(6.91366184978268854e+06, -3.99160453005807940e+06), c(2.04263768650606014e+07, -1.17931741816114876e+07)),
    (c(9.05000000000000071e+00, 0.00000000000000000e+00), c(2.12363278239213562e-09, 0.00000000000000000e+00), c(-6.44595648938066487e-09, 0.00000000000000000e+00), c(1.07896920709027611e+07, -6.22943162160887849e+06), c(3.21535525344817825e+07, -1.85638622111858353e+07)),
    (c(-9.00000000000000000e+00, 0.00000000000000000e+00), c(-2.21337215473414034e-02, 0.00000000000000000e+00), c(-9.75663980926331553e-01, 0.00000000000000000e+00), c(1.35172888115165174e-01, -9.08210134339555580e-02), c(-2.68771146821031870e-01, -4.08124768058912291e-01)),
    (c(5.73201893475363633e+01, -1.77312123996803734e+01), c(-6.72047156175919878e-123, 1.67627014515910863e-123), c(4.95604369770023162e-122, -2.06161821548024957e-122), c(-1.47087710559204299e+120, 1.91039737955939831e+119), c(-1.10381962535512934e+121, 3.16682978044755184e+120)),
];

/// (ζ_k, Ai′(−ζ_k))
pub const AIRY_ZEROS: &[(f64, f64)] = &[
    (2.33810741045976700e+00, 7.01210822720691351e-01),
    (4.08794944413097028e+00, -8.03111369654863960e-01),
    (5.52055982809555079e+00, 8.65204025894151907e-01),
    (6.78670809007175890e+00, -9.10850737049601844e-01),
    (7.94413358712085316e+00, 9.47335709441567753e-01),
    (9.02265085334098060e+00, -9.77922808569498647e-01),
    (1.00401743415580853e+01, 1.00437012266031189e+00),
    (1.10085243037332621e+01, -1.02773868882078623e+00),
    (1.19360155632362623e+01, 1.04872064858818947e+00),
    (1.28287767528657568e+01, -1.06779385915742786e+00),
];

/// (n, z, J, J′, H, H′)
pub const BESSEL: &[(u32, C64, C64, C64, C64, C64)] = &[
    (0, c(1.00000000000000000e+00, 0.00000000000000000e+00), c(7.65197686557966605e-01, 0.00000000000000000e+00), c(-4.40050585744933498e-01, 0.00000000000000000e+00), c(7.65197686557966605e-01, 8.82569642156769557e-02), c(-4.40050585744933498e-01, 7.81212821300288685e-01)),
    (1, c(5.00000000000000000e-01, 0.00000000000000000e+00), c(2.42268457674873899e-01, 0.00000000000000000e+00), c(4.53932891891065116e-01, 0.00000000000000000e+00), c(2.42268457674873899e-01, -1.47147239267024310e+00), c(4.53932891891065116e-01, 2.49842605183377975e+00)),
    (5, c(1.00000000000000000e+01, 5.00000000000000000e-01), c(-2.57642378282837370e-01, -5.27419259956474484e-02), c(-1.11379857962860179e-01, 9.57545268538678024e-02), c(-1.47981169601035328e-01, 9.28716594287117142e-02), c(-6.98329448659770896e-02, -1.37035670527283077e-01)),
    (0, c(1.00000000000000000e+02, -3.00000000000000000e+00), c(2.12752274926376245e-01, -7.70575275292174733e-01), c(7.73265759542665299e-01, 2.15635911151133397e-01), c(4.24567531960194866e-01, -1.54500979265293625e+00), c(1.54267633065015364e+00, 4.32228267781343434e-01)),
    (3, c(2.50000000000000000e+01, -2.00000000000000000e+00), c(3.84653820501039911e-01, 4.36349514349441303e-01), c(-4.55385301378313068e-01, 3.57687252146832835e-01), c(7.53805200442469903e-01, 8.88224233159143450e-01), c(-8.94996932310682225e-01, 7.30466110336292829e-01)),
    (10, c(3.00000000000000000e+00, -1.00000000000000000e+00), c(-2.23805308873918334e-05, -1.40205988862291148e-06), c(-6.25860958640110925e-05, -2.74629456935222667e-05), c(1.41223885023834669e+02, 1.47221860786381626e+03), c(1.16251547216561880e+03, -4.31611786602149459e+03)),
    (50, c(6.00000000000000000e+01, -5.00000000000000000e-01), c(-1.43289215110110363e-01, 6.15440443640391001e-04), c(-1.47421642333383563e-03, -2.13622675057957637e-02), c(-1.82189284506619836e-01, 9.43665100863909194e-03), c(-2.22996337369115762e-03, -1.01117378074268974e-01)),
    (100, c(9.50000000000000000e+01, -2.00000000000000011e-01), c(2.31025232893357496e-02, -1.69470545260206945e-03), c(8.46883880078144399e-03, -4.82527807581576167e-04), c(4.74537956889274637e-02, -4.58303060034663590e-01), c(-1.65982313622436766e-03, 1.20948937108260199e-01)),
    (7, c(1.50000000000000000e+00, 2.00000000000000004e-02), c(2.45923053648100146e-05, 2.25495793458921739e-06), c(1.12563074717516082e-04, 8.74679601013286514e-06), c(-1.70990475651480494e+02, -1.87842328861592136e+03), c(8.96200401841439884e+02, 8.51405049857484119e+03)),
    (2, c(5.00000000000000000e+02, -5.00000000000000000e+00), c(2.53736618158180915e+00, -7.56782685920448839e-01), c(7.54303698423373858e-01, 2.53784869079257325e+00), c(5.07450266255841509e+00, -1.51363639645730119e+00), c(1.50853660176819004e+00, 5.07592715379422721e+00)),
    (20, c(4.50000000000000000e+01, -1.00000000000000000e+00), c(8.13968543637458297e-03, -1.28067532506353166e-01), c(1.60576832233241151e-01, 7.19132942212822451e-03), c(1.51694544667749440e-02, -3.07400827075795358e-01), c(2.75208017330571875e-01, 1.63363177524556182e-02)),
    (0, c(1.00000000000000002e-02, 0.00000000000000000e+00), c(9.99975000156249516e-01, 0.00000000000000000e+00), c(-4.99993750026041586e-03, 0.00000000000000000e+00), c(9.99975000156249516e-01, -3.00545563708364583e+00), c(-4.99993750026041586e-03, 6.36785962820606528e+01)),
    (4, c(1.80000000000000000e+01, -9.00000000000000000e+00), c(3.05106321474018387e+02, -5.25859177450132393e+02), c(5.11339636765121099e+02, 3.01396022214728077e+02), c(6.10212641731479948e+02, -1.05171838119145332e+03), c(1.02267924727355057e+03, 6.02792046646708286e+02)),
    (40, c(4.10000000000000000e+01, -5.00000000000000028e-02), c(1.63640757917895036e-01, -1.49668703156039559e-03), c(2.99410840408415417e-02, 4.30697146886932372e-04), c(1.66887623083932735e-01, -1.65263768165012925e-01), c(3.02565774271163559e-02, 6.53643679212331796e-02)),
    (150, c(2.00000000000000000e+02, -4.00000000000000000e+00), c(-2.28828570004479176e-01, -4.30764026809043021e-01), c(2.85363671924134310e-01, -1.54735835549288187e-01), c(-4.55175792267664026e-01, -8.65766565163848423e-01), c(5.67862526331965656e-01, -3.11019970630201870e-01)),
    (1000, c(1.01000000000000000e+03, -1.00000000000000006e-01), c(6.52882384749068762e-02, 2.26627834731434497e-04), c(-2.26600899280404201e-03, 1.28412333349993391e-04), c(6.62321670162935583e-02, 6.45935233525503968e-03), c(-2.27921753564073667e-03, 9.56835757072328416e-03)),
    (0, c(3.95000000000000000e+01, -1.00000000000000000e+00), c(1.02180341075471845e-01, 1.27818454559939232e-01), c(-1.68363802737368451e-01, 7.52968729306184303e-02), c(1.79121112755058820e-01, 2.94917125537978275e-01), c(-2.97112546912325359e-01, 1.75346749271485663e-01)),
    (1, c(4.05000000000000000e+01, -1.00000000000000000e+00), c(1.73023460388679218e-01, 6.67311231480459954e-02), c(-8.85412892627912701e-02, 1.30411568708953984e-01), c(3.04340496151456030e-01, 1.53178197589971199e-01), c(-1.56849824149618011e-01, 3.02289183799762551e-01)),
    (12, c(2.10000000000000009e+00, -2.99999999999999989e-01), c(-4.18159883380500959e-10, -3.87151731548919174e-09), c(8.34979477864874791e-10, -2.17054434942587203e-08), c(6.88041358393507544e+06, 7.11510070185077726e+05), c(-3.72880390112195984e+07, -9.51694941129187122e+06)),
    (3, c(-4.00000000000000000e+00, 2.99999999999999989e-02), c(-4.30260837641415539e-01, 1.24537730448952928e-03), c(4.15386510016571772e-02, 5.95792163351925239e-03), c(4.19687877314594004e-01, 1.80772934585745587e-01), c(-4.17917483658704902e-02, 3.46497752684923888e-01)),
];

/// (n, z, ln|J|, ln|H|, J·H)
pub const DEEP: &[(u32, C64, f64, f64, C64)] = &[
    (300, c(5.00000000000000000e-01, 0.00000000000000000e+00), -1.83079436592230263e+03, 1.82394585495070328e+03, c(0.00000000000000000e+00, -1.06103442762229389e-03)),
    (300, c(5.00000000000000000e+00, -1.00000000000000006e-01), -1.13997939890575003e+03, 1.13313102539936904e+03, c(-5.89714911935754770e-09, -1.06118029296077706e-03)),
    (100, c(1.00000000000000000e+00, 5.00000000000000000e-01), -4.21898772468349648e+02, 4.16148909899167791e+02, c(1.59188774749950780e-07, -3.18321823475633528e-03)),
];

/// (z, ζ(z))
pub const ZETA: &[(C64, C64)] = &[
    (c(2.00000000000000000e+00, 0.00000000000000000e+00), c(-1.01810488856711601e+00, 0.00000000000000000e+00)),
    (c(5.00000000000000000e-01, 0.00000000000000000e+00), c(7.70551836433815529e-01, 0.00000000000000000e+00)),
    (c(1.30000000000000004e+00, -2.00000000000000004e-02), c(-3.49181579482743976e-01, 2.16285057197141556e-02)),
    (c(6.99999999999999956e-01, 1.00000000000000002e-02), c(4.19903156764799446e-01, -1.57418929217024092e-02)),
    (c(1.80000000000000004e+00, -2.99999999999999989e-01), c(-8.53501287784544482e-01, 2.70735393482310072e-01)),
    (c(2.00000000000000011e-01, 0.00000000000000000e+00), c(1.57093058952306408e+00, 0.00000000000000000e+00)),
];

/// (n, v, lattice seed, root of F_n)
pub const SECULAR_ROOTS: &[(u32, f64, C64, C64)] = &[
    (0, 1.00000000000000000e+00, c(3.29944858946112376e+01, -2.08263765308282300e+00), c(3.29663357311560574e+01, -2.09471864050492140e+00)),
    (0, 1.00000000000000000e+00, c(1.10200401184646744e+01, -1.50886484727261871e+00), c(1.09593047034998161e+01, -1.54486565389650310e+00)),
    (3, 2.00000000000000000e+00, c(2.20147096306572720e+01, -1.52769152426755705e+00), c(2.17781011930537005e+01, -1.55025472912336304e+00)),
    (10, 5.00000000000000000e-01, c(3.29906046125843844e+01, -2.42916604441043971e+00), c(3.46511937365405771e+01, -2.55319593939666056e+00)),
    (0, 1.75000000000000000e+02, c(1.74591857645434885e+02, -3.99089759744366501e-01), c(1.74590481487953895e+02, -4.00963445852407119e-01)),
];

pub const C11: f64 = 1.94621325301037862;
