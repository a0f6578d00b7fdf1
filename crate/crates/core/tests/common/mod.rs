pub const GAMMA: &[(f64, f64)] = &[
    (0.001, 999.42377248459546611),
    (0.01, 99.432585119150603714),
    (0.1, 9.5135076986687318363),
    (0.25, 3.6256099082219083119),
    (0.5, 1.7724538509055160273),
    (0.75, 1.2254167024651776451),
    (1.5, 0.88622692545275801365),
    (2.5, 1.3293403881791370205),
    (3.7, 4.1706517837966031654),
    (7.3, 1271.4236336639092731),
    (12.9, 372227524.66449585242),
    (25.5, 3.0867705405286967828e+24),
    (33.3, 7.487577596522706608e+35),
    (49.9, 4.1180110342530580419e+62),
];

/// (alpha, beta, z, E_{alpha,beta}(z))
pub const ML: &[(f64, f64, f64, f64)] = &[
    (0.3, 1.0, -0.5, 0.63264900594359902138),
    (0.3, 1.0, -2.0, 0.29023222616787535326),
    (0.3, 1.0, -5.0, 0.13708086902027063758),
    (0.3, 1.0, -10.0, 0.072649729072772085356),
    (0.3, 1.0, 0.5, 2.0620157899559994849),
    (0.3, 1.0, 3.0, 272036108062508801.09),
    (0.3, 0.3, -0.5, 0.14375650014722127361),
    (0.3, 0.3, -2.0, 0.032062399218847496015),
    (0.3, 0.3, -5.0, 0.0072751008031549118806),
    (0.3, 0.3, -10.0, 0.0020517863032276150783),
    (0.3, 0.3, 0.5, 1.1694769581219357911),
    (0.3, 0.3, 3.0, 3531095639651277286.7),
    (0.3, 1.3, -0.5, 0.73470198811280195724),
    (0.3, 1.3, -2.0, 0.35488388691606232337),
    (0.3, 1.3, -5.0, 0.17258382619594587248),
    (0.3, 1.3, -10.0, 0.092735027092722791464),
    (0.3, 1.3, 0.5, 2.1240315799119989698),
    (0.3, 1.3, 3.0, 90678702687502933.364),
    (0.5, 1.0, -0.5, 0.61569034419292587487),
    (0.5, 1.0, -2.0, 0.25539567631050574387),
    (0.5, 1.0, -5.0, 0.11070463773306862637),
    (0.5, 1.0, -10.0, 0.056140992743822585858),
    (0.5, 1.0, -30.0, 0.018795888861416751497),
    (0.5, 1.0, 0.5, 1.9523604891825570933),
    (0.5, 1.0, 3.0, 16205.988853999586625),
    (0.5, 0.5, -0.5, 0.25634441145129334951),
    (0.5, 0.5, -2.0, 0.053398230926744799218),
    (0.5, 0.5, -5.0, 0.010666394882413155097),
    (0.5, 0.5, -10.0, 0.0027796561095304283729),
    (0.5, 0.5, -30.0, 0.00031291770525374203432),
    (0.5, 0.5, 0.5, 1.5403698281390348336),
    (0.5, 0.5, 3.0, 48618.530751582307633),
    (0.5, 1.5, -0.5, 0.76861931161414825026),
    (0.5, 1.5, -2.0, 0.37230216184474712807),
    (0.5, 1.5, -5.0, 0.17785907245338627473),
    (0.5, 1.5, -10.0, 0.094385900725617741414),
    (0.5, 1.5, -30.0, 0.032706803704619441617),
    (0.5, 1.5, 0.5, 1.9047209783651141866),
    (0.5, 1.5, 3.0, 5401.6629513331955418),
    (0.6, 1.0, -0.5, 0.60947582195620002044),
    (0.6, 1.0, -2.0, 0.23557103111182496424),
    (0.6, 1.0, -5.0, 0.095117846438754616683),
    (0.6, 1.0, -10.0, 0.046589654426804278745),
    (0.6, 1.0, -30.0, 0.015211431482801456675),
    (0.6, 1.0, -100.0, 0.0045252427131328115463),
    (0.6, 1.0, 0.5, 1.8886847280930526741),
    (0.6, 1.0, 3.0, 854.85061126481007006),
    (0.6, 0.6, -0.5, 0.31922307382676062617),
    (0.6, 0.6, -2.0, 0.064794543691715566734),
    (0.6, 0.6, -5.0, 0.011732767406084412348),
    (0.6, 0.6, -10.0, 0.0028711417613393081734),
    (0.6, 0.6, -30.0, 0.00030776027117107536526),
    (0.6, 0.6, -100.0, 0.000027252369948779680219),
    (0.6, 0.6, 0.5, 1.6273322751196112034),
    (0.6, 0.6, 3.0, 1778.4496950494450057),
    (0.6, 1.6, -0.5, 0.78104835608759995913),
    (0.6, 1.6, -2.0, 0.38221448444408751788),
    (0.6, 1.6, -5.0, 0.18097643071224907666),
    (0.6, 1.6, -10.0, 0.095341034557319572125),
    (0.6, 1.6, -30.0, 0.032826285617239951444),
    (0.6, 1.6, -100.0, 0.0099547475728686718845),
    (0.6, 1.6, 0.5, 1.7773694561861053483),
    (0.6, 1.6, 3.0, 284.61687042160335669),
    (0.75, 1.0, -0.5, 0.60379034509524675559),
    (0.75, 1.0, -2.0, 0.20207848341295445435),
    (0.75, 1.0, -5.0, 0.067923974332643942122),
    (0.75, 1.0, -10.0, 0.030643250976059637773),
    (0.75, 1.0, -30.0, 0.0095166926931171288816),
    (0.75, 1.0, -100.0, 0.0027866210194390933563),
    (0.75, 1.0, 0.5, 1.7937773945015026827),
    (0.75, 1.0, 3.0, 100.86180177510028035),
    (0.75, 0.75, -0.5, 0.42184231246858204849),
    (0.75, 0.75, -2.0, 0.084363572245660564019),
    (0.75, 0.75, -5.0, 0.012140520971468211535),
    (0.75, 0.75, -10.0, 0.0025434431529668198927),
    (0.75, 0.75, -30.0, 0.00024622074958261615934),
    (0.75, 0.75, -100.0, 0.000021115050840055732698),
    (0.75, 0.75, 0.5, 1.6807270339672676018),
    (0.75, 0.75, 3.0, 145.57961543706038234),
    (0.75, 1.75, -0.5, 0.79241930980950648883),
    (0.75, 1.75, -2.0, 0.39896075829352277283),
    (0.75, 1.75, -5.0, 0.18641520513347121158),
    (0.75, 1.75, -10.0, 0.096935674902394036223),
    (0.75, 1.75, -30.0, 0.033016110243562762371),
    (0.75, 1.75, -100.0, 0.0099721337898056090664),
    (0.75, 1.75, 0.5, 1.5875547890030053654),
    (0.75, 1.75, 3.0, 33.287267258366760117),
    (0.9, 1.0, -0.5, 0.60340549869586096762),
    (0.9, 1.0, -2.0, 0.16352830001693004885),
    (0.9, 1.0, -5.0, 0.034431324804098423905),
    (0.9, 1.0, -10.0, 0.012820606051102102705),
    (0.9, 1.0, -30.0, 0.0037137076984598529581),
    (0.9, 1.0, -100.0, 0.001068972418287089285),
    (0.9, 1.0, -1000.0, 0.00010528835943209591488),
    (0.9, 1.0, 0.5, 1.7043087220993991263),
    (0.9, 1.0, 3.0, 32.921897176850828949),
    (0.9, 0.9, -0.5, 0.53190235156843732495),
    (0.9, 0.9, -2.0, 0.1105980242932084808),
    (0.9, 0.9, -5.0, 0.010212790452992133754),
    (0.9, 0.9, -10.0, 0.0014346523622941288355),
    (0.9, 0.9, -30.0, 0.00011825044794307209151),
    (0.9, 0.9, -100.0, 9.7850635889096929541e-6),
    (0.9, 0.9, -1000.0, 9.4917076469339176804e-8),
    (0.9, 0.9, 0.5, 1.6742480910659136781),
    (0.9, 0.9, 3.0, 37.227740541104382002),
    (0.9, 1.9, -0.5, 0.79318900260827806477),
    (0.9, 1.9, -2.0, 0.41823584999153497557),
    (0.9, 1.9, -5.0, 0.19311373503918031522),
    (0.9, 1.9, -10.0, 0.09871793939488978973),
    (0.9, 1.9, -30.0, 0.033209543076718004901),
    (0.9, 1.9, -100.0, 0.0099893102758171291072),
    (0.9, 1.9, -1000.0, 0.00099989471164056790409),
    (0.9, 1.9, 0.5, 1.4086174441987982526),
    (0.9, 1.9, 3.0, 10.64063239228360965),
    (0.99, 1.0, -0.5, 0.60608995263141647835),
    (0.99, 1.0, -2.0, 0.13821728069806402584),
    (0.99, 1.0, -5.0, 0.0097680921391741255086),
    (0.99, 1.0, -10.0, 0.0013478638060832072856),
    (0.99, 1.0, -30.0, 0.0003597560516821720766),
    (0.99, 1.0, -100.0, 0.00010261344540995115483),
    (0.99, 1.0, -1000.0, 0.00001007694492000442879),
    (0.99, 1.0, 0.5, 1.6541261938718982644),
    (0.99, 1.0, 3.0, 20.976948519286249038),
    (0.99, 0.99, -0.5, 0.59910754973579932754),
    (0.99, 0.99, -2.0, 0.13250045921585249905),
    (0.99, 0.99, -5.0, 0.0071895423030289530632),
    (0.99, 0.99, -10.0, 0.00021562962689190303318),
    (0.99, 0.99, -30.0, 0.000012777095829753515026),
    (0.99, 0.99, -100.0, 1.0367224408633153197e-6),
    (0.99, 0.99, -1000.0, 9.9959144665478066134e-9),
    (0.99, 0.99, 0.5, 1.6518526037673021461),
    (0.99, 0.99, 3.0, 21.213694630976346687),
    (0.99, 1.99, -0.5, 0.78782009473716704329),
    (0.99, 1.99, -2.0, 0.43089135965096798708),
    (0.99, 1.99, -5.0, 0.1980463815721651749),
    (0.99, 1.99, -10.0, 0.099865213619391679271),
    (0.99, 1.99, -30.0, 0.033321341464943927597),
    (0.99, 1.99, -100.0, 0.0099989738655459004885),
    (0.99, 1.99, -1000.0, 0.00099998992305507999557),
    (0.99, 1.99, 0.5, 1.3082523877437965289),
    (0.99, 1.99, 3.0, 6.6589828397620830128),
    (0.999, 1.0, -0.5, 0.60648529133691131558),
    (0.999, 1.0, -2.0, 0.13562392299454344287),
    (0.999, 1.0, -5.0, 0.0070439569266840405896),
    (0.999, 1.0, -10.0, 0.00017584834590871150439),
    (0.999, 1.0, -30.0, 0.000035830164124046603036),
    (0.999, 1.0, -100.0, 0.000010211830300787619001),
    (0.999, 1.0, -1000.0, 1.0025808660865953127e-6),
    (0.999, 1.0, 0.5, 1.6492602159574122284),
    (0.999, 1.0, 3.0, 20.171906005939226943),
    (0.999, 0.999, -0.5, 0.60578914109663759921),
    (0.999, 0.999, -2.0, 0.13504774903857241912),
    (0.999, 0.999, -5.0, 0.0067842453147721392145),
    (0.999, 0.999, -10.0, 0.000062786560858997956872),
    (0.999, 0.999, -30.0, 1.2856687177175941635e-6),
    (0.999, 0.999, -100.0, 1.0413970381449227646e-7),
    (0.999, 0.999, -1000.0, 1.0035866126776674452e-9),
    (0.999, 0.999, 0.5, 1.6490395794118553102),
    (0.999, 0.999, 3.0, 20.194364029310104357),
    (0.999, 1.999, -0.5, 0.78702941732617736885),
    (0.999, 1.999, -2.0, 0.43218803850272827857),
    (0.999, 1.999, -5.0, 0.19859120861466319188),
    (0.999, 1.999, -10.0, 0.09998241516540912885),
    (0.999, 1.999, -30.0, 0.033332138994529198447),
    (0.999, 1.999, -100.0, 0.0099998978816969921238),
    (0.999, 1.999, -1000.0, 0.0009999989974191339134),
    (0.999, 1.999, 0.5, 1.2985204319148244569),
    (0.999, 1.999, 3.0, 6.3906353353130756478),
];

/// (alpha, theta, M_alpha(theta)); entries below the f64 range are 0
pub const MAINARDI: &[(f64, f64, f64)] = &[
    (0.1, 0.25, 0.74345849940024672097),
    (0.1, 1.0, 0.37029046275149084308),
    (0.1, 2.0, 0.14406688865856316519),
    (0.1, 3.5, 0.034006370842480310069),
    (0.1, 6.0, 0.002879532777129466725),
    (0.3, 0.25, 0.66136483500810148487),
    (0.3, 1.0, 0.39052334188638718059),
    (0.3, 2.0, 0.16840030622678312459),
    (0.3, 3.5, 0.037312894563441080691),
    (0.3, 6.0, 0.0017858919284447765677),
    (0.5, 0.25, 0.55544263479833125017),
    (0.5, 1.0, 0.43939128946772239705),
    (0.5, 2.0, 0.20755374871029735167),
    (0.5, 3.5, 0.026387497965075187331),
    (0.5, 6.0, 0.000069626525973373926945),
    (0.7, 0.25, 0.40364009291524529347),
    (0.7, 1.0, 0.5534214430665607005),
    (0.7, 2.0, 0.24912885806519595984),
    (0.7, 3.5, 0.00027119513703021494385),
    (0.7, 6.0, 1.0699960978608642834e-22),
    (0.9, 0.25, 0.16477251827512051901),
    (0.9, 1.0, 1.0081467456212710728),
    (0.9, 2.0, 7.8193669162221498296e-17),
    (0.9, 3.5, 0.0),
    (0.9, 6.0, 0.0),
];
