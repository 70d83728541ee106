// Generated by gen_special.py (mpmath, 50 digits). Do not edit.

pub const LOG_GAMMA: &[(f64, f64)] = &[
    (1.0, 0.0),
    (0.5, 0.5723649429247001),
    (10.3, 13.482036786138359),
    (2.0, 0.0),
    (3.0, 0.6931471805599453),
    (0.8051907771945501, 0.14708140984360205),
    (149568.6474228955, 1632613.1394690322),
    (367730.63911581394, 4344770.988388213),
    (27.76794433503783, 63.78943195214922),
    (28.35924027807402, 65.75048353962468),
    (6362.530083377668, 49358.20234125745),
    (1749.4107360004193, 11310.68468240911),
    (304.0712418563397, 1432.4443028213404),
    (37.451972828872364, 97.34838277079947),
    (108955.17095921068, 1154777.3967165032),
    (2787.1771366097887, 19319.851260670737),
    (308.3647941325595, 1457.0148229173594),
    (31271.0307737379, 292393.87253550254),
    (1209.6104949196088, 7373.639712604677),
    (4782.247907865421, 35732.823912901724),
    (126661.78476792139, 1361517.4895506564),
    (35.133462281272344, 89.0536745201657),
    (92991.69399211516, 970853.1693092738),
    (1.0288057239129598, -0.015954051787093446),
    (417373.6316412321, 4984160.629081541),
    (25062.315144278276, 228792.75205519813),
    (437511.27417267475, 5245254.856330915),
    (282119.08231862803, 3258493.8946040645),
    (41372.828000904505, 398431.64318092575),
    (740129.4566550049, 9262403.746930819),
    (5.216570050953666, 3.509343431543226),
    (1.121756444745922, -0.05875577468223511),
    (208.55872237589716, 903.4401000533005),
    (1.7786314328279216, -0.07700461628974792),
    (241.68749629290815, 1082.7832787571663),
    (1.5090786555497013, -0.12041253656828656),
    (5583.210044164826, 42582.64681745014),
    (1.550348758619894, -0.11777741438683537),
    (2.009075064164832, 0.0038633021190184443),
    (4.197662870809444, 2.045491602458963),
    (9.630405297404854, 11.976869350258411),
    (1005.0306284969416, 5939.980896786034),
    (117.27072199796167, 440.00129515451573),
    (22.634735721363782, 47.33687589965634),
    (2.7885770625475184, 0.5071292665016697),
    (1350.3748191843506, 8380.627454126166),
    (6.943554498848928, 6.473786274748694),
    (169176.75242028252, 1867486.2014353173),
    (732.2310603344434, 4095.2564002155796),
    (0.6051029230148885, 0.39041932064240664),
    (100.92834579433033, 363.40906361976533),
    (2239.049933103986, 15029.611002623222),
    (1.3849507275601523, -0.11857244394140813),
    (57.09678474553535, 172.7433342028544),
    (0.8137200053930856, 0.13903429599741807),
    (994350.3120129153, 12737467.237573434),
    (103756.18480854532, 1094602.0438534706),
    (127.39949995215521, 488.6435689121511),
    (3069.3253379480734, 21571.84610024073),
    (223.00454987993848, 981.0396231946459),
    (799.1456821602688, 4539.556326589385),
    (0.69894410007791, 0.26215705044652976),
    (302325.0077236785, 3512786.8443362108),
    (5411.250594059094, 41101.75474437023),
    (1776.9539290533876, 11516.558532472174),
    (13932.62060078565, 119008.42837582453),
    (266599.0909158053, 3064151.664023461),
    (835.172810539001, 4781.123298215885),
    (14.894086204032236, 24.908358585511987),
    (377.9538354893052, 1863.0678002654718),
    (1836.7841544453315, 11965.227089085738),
    (3.581743667968766, 1.2922436806087836),
    (494.61617281784265, 2571.6919793861844),
    (4669.575223608203, 34779.535682247806),
    (25743.322856763767, 235699.9175894042),
    (1289.020760655472, 7939.81762605017),
    (21.239958213635614, 43.0618146682856),
    (168.357513877629, 693.0146055290573),
    (179826.09460262442, 1996018.7573274288),
    (55495.45386844272, 550735.4701634455),
    (483.90339817110595, 2505.3600718792704),
    (76599.31393398845, 784858.1704797058),
    (413555.8183665001, 4934769.012679046),
    (27568.056126600077, 254294.94190784896),
    (4.365975425845039, 2.2698527242727558),
    (0.5189973260148824, 0.5359352671440556),
    (2.054159515297061, 0.023833145968460673),
    (313113.81507627596, 3649123.8246772406),
    (18511.88466527528, 163385.01396807152),
    (445.9705632191194, 2272.431678737617),
    (2021.9760962926491, 13366.076445297938),
    (61.95546743906571, 192.5556316500025),
    (2256.074539581427, 15160.996302035317),
    (966.7889933207703, 5676.381500926875),
    (3196.568798969056, 22596.09247101079),
    (142134.50156902158, 1544219.4125873551),
    (49901.1191145246, 489914.6528427653),
    (7732.11572008572, 61491.024238833765),
    (393.86851432434514, 1957.8276172111491),
    (0.7842537549002979, 0.16754293314687),
];

pub const DIGAMMA: &[(f64, f64)] = &[
    (1.0, -0.5772156649015329),
    (0.5, -1.9635100260214235),
    (0.1, -10.423754940411076),
    (2.5, 0.7031566406452432),
    (100.0, 4.600161852738087),
    (15.742906930065358, 2.7242934708363307),
    (55.401831558279554, 4.005560532280779),
    (1724.727692172857, 7.452534528544122),
    (159121.82636137333, 11.977422249099167),
    (30.567927579351775, 3.403505153187524),
    (310.92853682813944, 5.737954152120007),
    (54413.1237495923, 10.904351460158137),
    (69459.11077085944, 11.148486325687161),
    (17373.719120508376, 9.76268516865651),
    (5045.414558372615, 8.526135998379061),
    (3497.1854317650645, 8.159570782683348),
    (589015.4103029863, 13.286206776919524),
    (71163.95662805144, 11.172734716044612),
    (41.22879034469211, 3.7069603372403392),
    (6.326696205190926, 1.7636712012414064),
    (8.518341410303451, 2.082377910711357),
    (16374.896702240454, 9.70347421736888),
    (9.942604951366173, 2.2456982885431107),
    (20.330717426945732, 2.9873380263290206),
    (6.6808195745579875, 1.8225366289663951),
    (1.2568633533105407, -0.21926696322335942),
    (0.5947243271357167, -1.5599424832665052),
    (218605.05822838767, 12.295019706421991),
    (5.710928099954282, 1.652282744323943),
    (770446.6577028751, 13.554725051615897),
    (587.465054436534, 6.374965406518228),
    (2775.395728386371, 7.928368455529523),
    (0.3088743427999238, -3.3967345831200952),
    (195.3794593388171, 5.272382307310199),
    (8429.661633466048, 9.039452596276922),
    (39431.59465987913, 10.582309988620114),
    (0.12742428853038984, -8.232929968053957),
    (0.6918514360902491, -1.2433329837996823),
    (37.81045954450526, 3.619303631758396),
    (58889.557608046576, 10.983410573242296),
    (7.757084735483446, 1.982766753568639),
    (1.2989552841103198, -0.1703765159296421),
    (385093.6093142707, 12.861240426405779),
    (134118.08600250832, 11.806472201632165),
    (165066.34170921514, 12.014099713950605),
    (5.494209722446261, 1.6099382363339316),
    (12472.859933235854, 9.43127026989275),
    (3229.0695329619875, 8.07979445306654),
    (16.892336071734995, 2.796968874716582),
    (1.7269345588058505, 0.22969698255574403),
    (1.0760565934190132, -0.4586171217844411),
    (0.10245147290961752, -10.18096545580544),
    (43979.88824494771, 10.691476354186978),
    (180464.93792454601, 12.10328901753679),
    (0.7996858340613581, -0.9657312018631324),
    (150.67498403896536, 5.01180302197779),
    (0.15029553598273293, -7.007486651165857),
    (1972.5637780060079, 7.586835887141514),
    (45086.95496415357, 10.716337147013107),
    (0.575210449699916, -1.6339458757732264),
    (416.21932595906327, 6.030010576431704),
    (2937.2151135374315, 7.9850469321891655),
    (622301.9684594272, 13.341179930283745),
    (5.631892602548246, 1.6370463081001156),
    (15.825513420815817, 2.7296962536240863),
    (696417.4841787162, 13.453703875118086),
    (48.09163981460016, 3.862675506414055),
    (34698.10384922265, 10.454425910248744),
    (0.16715189682171527, -6.314070334045596),
    (5.069664720386013, 1.521418871550379),
    (496.3663811842724, 6.206306667115378),
    (77.99785354771693, 4.350257177217594),
    (551396.9402461585, 13.220209321704484),
    (25.130487493054837, 3.204053666764868),
    (22.129352744414522, 3.074140346164032),
    (724.1266954494482, 6.584275724962847),
    (1.679544938921998, 0.19219458757244712),
    (1220.0142052339602, 7.1062078940130355),
    (0.32127282188185974, -3.2579488390480407),
    (49310.08143110937, 10.805873690679901),
    (2337.695950416291, 7.7567071856419645),
    (145706.7347932047, 11.889347783261504),
    (0.4014342735942899, -2.550982737214304),
    (6808.7647929079, 8.825892564771179),
    (4053.2152706891893, 8.307142375202028),
    (55.20276732805933, 4.0019282225378126),
    (50496.714098629134, 10.829653644125548),
    (3625.6746587267476, 8.19565775101632),
    (755.7462190674694, 6.62704388710281),
    (147384.49297033876, 11.900796656983031),
    (115.25963016903859, 4.742842932229616),
    (6.360264628500144, 1.7694019318718663),
    (8065.913081130902, 8.995340208875279),
    (8.246659639850481, 2.047954049191488),
    (31763.770977912005, 10.366065900587628),
    (553.1414580784079, 6.31470956976962),
    (262.3020089646866, 5.567589135021638),
    (3.965627826805381, 1.2463144694653894),
    (3.0558204270300435, 0.9445930138918129),
    (72362.5982089332, 11.189437935903495),
];

pub const INC_BETA: &[(f64, f64, f64, f64)] = &[
    (2.0, 3.0, 0.4, 0.5248),
    (1.0, 1.0, 0.3, 0.3),
    (0.5, 0.5, 0.5, 0.5),
    (250.0, 4.5, 0.98, 0.33675578885131585),
    (4.5, 1500.0, 0.002, 0.2613846811141995),
    (
        21.672612551812925,
        10.666006429103916,
        0.7321126673598379,
        0.7670566511863813,
    ),
    (
        17.682596191720222,
        96.46300291497815,
        0.33505297980348614,
        0.9999946222001531,
    ),
    (
        153.5093427953742,
        5.436871295520436,
        0.9090425039772937,
        0.0016413469110734473,
    ),
    (110.06386248031727, 76.97796057085928, 0.9338647690401061, 1.0),
    (1.8288035033876584, 337.68093009003985, 0.3359299150451406, 1.0),
    (
        11.248041343440006,
        12.773224602000578,
        0.9209949811112322,
        0.9999999953218731,
    ),
    (
        1.913737294551117,
        1.1872802019681243,
        0.7511175447191528,
        0.6506916504091576,
    ),
    (
        125.25449590823733,
        22.8897496686261,
        0.513033203271247,
        6.0224579372078936e-18,
    ),
    (
        7.942086601620476,
        4.45691960258374,
        0.6952782573022291,
        0.6360353706899293,
    ),
    (
        0.8053831907302901,
        9.151605872189304,
        0.46536797965318366,
        0.9979457433850613,
    ),
    (
        13.844462148020956,
        2.34405223554245,
        0.37752190841234967,
        2.468329945065794e-05,
    ),
    (
        13.347459371731965,
        9.896924915013013,
        0.3550427465159841,
        0.015935564869590378,
    ),
    (
        379.7563634545152,
        19.389155429162614,
        0.5599100131900329,
        1.4223505962630303e-71,
    ),
    (387.01208145620717, 2.89634654856787, 0.10048688911952508, 0.0),
    (
        17.580672444706554,
        1.0173511678959188,
        0.9099467156744299,
        0.19513114626962405,
    ),
    (
        1.5725881721208632,
        9.751098055033541,
        0.19859991662788545,
        0.76411348959404,
    ),
    (
        186.7211674083462,
        20.564052078505327,
        0.4792060612937654,
        8.251502706012028e-39,
    ),
    (
        224.36152738932003,
        99.0778683438239,
        0.6739546459584468,
        0.2189925809414694,
    ),
    (
        221.14978563380063,
        73.75530186643363,
        0.2559960059577706,
        1.00344178292435e-70,
    ),
    (
        6.110090402802393,
        31.02694212239182,
        0.5036547026887835,
        0.9999939969912565,
    ),
    (
        2.6598519690424394,
        0.82797572082699,
        0.46567000185581586,
        0.10232286016252731,
    ),
    (
        1.9596784248310701,
        399.2738951167463,
        0.08486037340519914,
        0.9999999999999871,
    ),
    (15.879348659279175, 183.8719737475086, 0.38301831902410677, 1.0),
    (
        452.87399827101217,
        1.8614928888686508,
        0.9508043581199068,
        1.8978398043929694e-09,
    ),
    (
        1.6848803841451465,
        1.304724853808513,
        0.8210889949616047,
        0.8160874842203473,
    ),
    (
        22.717863263316477,
        58.07425190631093,
        0.4505717333620938,
        0.999195108727063,
    ),
    (
        152.46154678862666,
        98.59658818881454,
        0.5299105939816401,
        0.006651916817018309,
    ),
    (
        15.651972990810737,
        188.72960153748096,
        0.13202396014807138,
        0.9950925349159951,
    ),
    (
        0.9759773430479469,
        28.6657113469791,
        0.42910492593238037,
        0.9999999026190594,
    ),
    (358.9646006096866, 18.179686874580593, 0.05673362116424996, 0.0),
    (
        51.056907911213024,
        4.021864437117154,
        0.18194509248983948,
        2.3924433621708354e-34,
    ),
    (26.316806683254484, 287.8260940772595, 0.9615241180881081, 1.0),
    (
        1.5059646978601997,
        5.683311313256485,
        0.796346868870564,
        0.9996895223983345,
    ),
    (0.5388893783411962, 154.24562339033614, 0.972261585132889, 1.0),
    (
        1.40221026128018,
        1.4098331475995178,
        0.010892352480883716,
        0.0027082392253966053,
    ),
    (
        1.490860296515331,
        1.5693206093330516,
        0.712118675289676,
        0.7800119171312356,
    ),
    (
        333.17480115452264,
        148.39813899265144,
        0.6315608078571837,
        0.0026387999157706133,
    ),
    (
        0.7402068659572446,
        0.7076549623267486,
        0.6839628960698506,
        0.6386489663711278,
    ),
    (
        81.54895639317455,
        17.749701306292422,
        0.15432960094354353,
        1.3549501370504336e-49,
    ),
    (1.7665023837454565, 147.73195280653144, 0.9460771793335762, 1.0),
    (2.38476261515606, 382.0206658902852, 0.516312962790965, 1.0),
    (
        0.7188678304881406,
        24.13848440343641,
        0.2794217714275665,
        0.9998359760584751,
    ),
    (
        402.67971238546227,
        12.09329407102213,
        0.697967347593738,
        4.414862457283138e-48,
    ),
    (
        0.5053136848568304,
        67.48116891458572,
        0.1407779596197125,
        0.9999935818027873,
    ),
    (
        4.201807393723897,
        6.825179543329417,
        0.3173019788429565,
        0.349130877962701,
    ),
    (
        1.1218072898621092,
        10.249503419358941,
        0.15333534597831322,
        0.7858669938927658,
    ),
    (
        1.3177973968830943,
        0.536115151073484,
        0.4953452712428792,
        0.22662038005083043,
    ),
    (
        10.44224481493183,
        0.5114852788192763,
        0.3899873951244308,
        1.206488804056088e-05,
    ),
    (
        165.896251438691,
        22.055195078337317,
        0.5192909723208892,
        4.931956542405515e-27,
    ),
    (
        483.61365062644387,
        3.338203429649611,
        0.5875944967019447,
        1.8230540991868018e-107,
    ),
    (
        53.826186850905,
        18.944672739229876,
        0.40020843344848356,
        1.890353088573419e-09,
    ),
    (
        24.636531204015817,
        22.858165551801186,
        0.8970879489223261,
        0.9999999999735002,
    ),
    (5.773244914326756, 66.45207399132852, 0.5582156657585939, 1.0),
    (70.58456448525892, 277.19003388982475, 0.6796771411370934, 1.0),
    (
        3.201040679515162,
        2.320884349775645,
        0.823827233691049,
        0.8912132745081731,
    ),
    (6.403823894962274, 43.84640839372302, 0.7837240974442061, 1.0),
    (
        214.02029479068113,
        1.819270195335266,
        0.7612057457372062,
        1.185514632658956e-24,
    ),
    (
        4.081182450498877,
        13.647116958437115,
        0.24096308804895683,
        0.5820467251881927,
    ),
    (
        1.3744127689918966,
        1.8369291938573102,
        0.8574881173887171,
        0.957102280966966,
    ),
    (
        11.91470817502311,
        37.545270434379134,
        0.6297585491279845,
        0.9999999889176586,
    ),
    (
        372.24973012486913,
        333.0682479663803,
        0.11474187848706063,
        2.883485553371484e-158,
    ),
    (
        2.6441215289039333,
        2.6817741994070263,
        0.3656459279693899,
        0.2791415391047155,
    ),
    (
        42.76541561404812,
        19.68670005189515,
        0.8685323982569073,
        0.9998948297477527,
    ),
    (
        202.27772209917075,
        2.5113324811446485,
        0.9148598034312629,
        9.166218247350655e-07,
    ),
    (
        147.42235446792938,
        8.80402811553353,
        0.02400505076488213,
        5.459771631668032e-227,
    ),
    (
        54.0855166274965,
        7.5227640795363,
        0.003233389982040036,
        3.174233647780263e-127,
    ),
    (
        110.72183178243498,
        7.017596314226063,
        0.6974050988719096,
        1.2987039171294109e-11,
    ),
    (
        1.3554412579241255,
        0.5934345658970999,
        0.22946376172296357,
        0.07779506608842239,
    ),
    (122.13565084645434, 318.32571621854, 0.64043088115169, 1.0),
    (
        389.3760224250064,
        7.752649245600367,
        0.7466130366734481,
        4.131744844230157e-40,
    ),
    (
        177.10937067176494,
        9.865642214216312,
        0.8365398736629632,
        1.0692458873796994e-06,
    ),
    (20.526065962574886, 186.19283990064014, 0.9497983384651679, 1.0),
    (
        0.8514778141073053,
        19.619453601381498,
        0.4119416501016677,
        0.9999804995564612,
    ),
    (2.308973200048791, 474.43772704014754, 0.47085704244361226, 1.0),
    (
        12.281697652792337,
        1.307536595204111,
        0.31739183332803145,
        1.6663494885251132e-06,
    ),
    (
        9.005689152155389,
        6.605184344943567,
        0.5418351487122594,
        0.3818470351358663,
    ),
    (
        333.3270457259584,
        249.05372862934544,
        0.6065484723060242,
        0.953198441117236,
    ),
    (
        14.07149204893035,
        54.16895373192825,
        0.670686451502992,
        0.9999999999999987,
    ),
    (0.6215314224291946, 242.34192524275372, 0.5804822250170424, 1.0),
    (
        13.4510405142784,
        7.4141730593893,
        0.141128964927154,
        7.452844763587535e-08,
    ),
    (
        14.098704785267342,
        5.025478016791338,
        0.0513858888380202,
        1.7800008905184504e-15,
    ),
    (
        24.504000900796786,
        27.14831796318231,
        0.8731126255939646,
        0.9999999999962906,
    ),
    (
        29.336677209193237,
        1.764435294479155,
        0.6084432392088828,
        3.48019952968004e-06,
    ),
    (31.431436087720886, 411.4021951464231, 0.3408269606506853, 1.0),
    (
        17.716540643766688,
        0.6680625598128948,
        0.2723975809755077,
        3.0819371718750335e-11,
    ),
    (
        182.47809327885648,
        1.5767627612400843,
        0.9668027638404859,
        0.007292092570456266,
    ),
    (
        77.49864686179471,
        0.6346876576548747,
        0.5336651070204599,
        1.3834414751398295e-22,
    ),
    (
        75.6871182074803,
        374.21212257656106,
        0.13190446007423529,
        0.015067787507911807,
    ),
    (
        1.2344766416496262,
        2.1239946745894613,
        0.5379072339335453,
        0.7529001436928595,
    ),
    (8.212091347836715, 470.7954630978383, 0.6434606660344532, 1.0),
    (
        2.23482936755188,
        113.17714185505956,
        0.10780645010999335,
        0.9999466412968766,
    ),
    (
        0.5273292782515256,
        10.633849732124197,
        0.5685381218320149,
        0.9999680103035964,
    ),
    (
        0.6481907591026778,
        240.94371033924543,
        0.00995701077535327,
        0.9572726143503385,
    ),
    (
        2.9933786718072333,
        4.041238501133676,
        0.6573826285714698,
        0.8942049144984214,
    ),
    (
        1.2765435716137028,
        18.735415006505377,
        0.4562055945570206,
        0.9999772476092234,
    ),
];

/// (f, df1, df2, upper tail)
pub const F_SF: &[(f64, u32, u32, f64)] = &[
    (2.5, 9, 500, 0.008380520301015956),
    (1.0, 1, 10, 0.34089313230205986),
    (4.0, 5, 60, 0.003378218898665217),
    (0.3, 12, 1100, 0.9894854999418303),
    (1.3658233218463272, 11, 1392, 0.18287332215288088),
    (0.053185059607014064, 8, 9, 0.9998164113635916),
    (0.7847810039146499, 15, 3410, 0.6960616319131279),
    (3.3617488812513225, 20, 378, 2.1492831125037466e-06),
    (18.526877771314464, 11, 2103, 8.375665168560727e-36),
    (0.1765879439088521, 6, 2224, 0.9832257613501494),
    (0.185591101411935, 15, 49, 0.9995490176750476),
    (6.67435880578385, 12, 839, 1.5710626227429018e-11),
    (1.5943029912692688, 10, 1737, 0.10233145066120276),
    (0.09843800144902974, 20, 1957, 0.9999998997979938),
    (1.5665920481236706, 20, 5, 0.32689808430960576),
    (2.9927351771116393, 13, 56, 0.0022003459397079246),
    (0.32884485224607773, 19, 52, 0.9950775415048434),
    (1.3978239928684593, 10, 1881, 0.17500166490152044),
    (2.0078159995679288, 7, 1176, 0.051162822610629786),
    (1.7476548432398582, 14, 59, 0.06989092605476174),
    (0.3612747894191663, 6, 22, 0.8954708095354751),
    (0.8213932596042883, 14, 1846, 0.646303556248447),
    (7.790398694093093, 15, 2148, 2.5857069560546692e-17),
    (6.746350097458993, 16, 2068, 3.095270564326748e-15),
    (8.442583066659031, 14, 5, 0.013883520458296203),
    (0.087036777012719, 8, 42, 0.9994212041276382),
    (0.09238327162704764, 7, 1253, 0.9987054281992533),
    (2.481637862289397, 10, 120, 0.009721802654065819),
    (0.8011854571766103, 2, 10, 0.475626751899432),
    (1.1270704492332686, 5, 9, 0.41160661585840236),
    (0.06992488060776449, 15, 34, 0.9999989589008362),
    (1.643248802725324, 7, 263, 0.12348586553157956),
    (0.8987010501205552, 10, 25, 0.5481208455358751),
    (0.1488327149707476, 6, 11, 0.9853982659255555),
    (0.24530932183027335, 18, 150, 0.9993767897714153),
    (1.9120280960864902, 19, 118, 0.019037632152713178),
    (0.2244436854185001, 7, 260, 0.979357489452846),
    (0.1692884162943002, 18, 15, 0.9997062342880365),
    (12.466108687131193, 4, 180, 5.6796337659514586e-09),
    (9.873369994449183, 12, 1332, 9.97806469515759e-19),
    (17.850345985603163, 2, 24, 1.7814864417953177e-05),
    (0.6904265453963775, 13, 1457, 0.7743209592321605),
    (1.262796303611931, 11, 37, 0.28343971010681807),
    (1.2935724013265186, 12, 365, 0.2198417990978873),
    (6.515115569076817, 10, 3194, 4.884782461238917e-10),
    (0.9506155179955033, 18, 1981, 0.5158082961093494),
    (1.7983076838723524, 11, 9, 0.19368090145318223),
    (5.35391947372797, 17, 9, 0.007266236145269176),
    (16.89222689724569, 3, 531, 1.7103274456262102e-10),
    (10.205035706100848, 11, 6, 0.004905868739140047),
    (3.017820539413261, 6, 2833, 0.0060790187109975085),
    (0.057880003643134836, 12, 2921, 0.9999981726604322),
    (9.445943757497155, 16, 716, 1.4544327591784556e-21),
    (2.863426861254774, 3, 6, 0.12631005757722158),
    (1.867710755679209, 5, 640, 0.09794142377995388),
    (0.259629954165249, 17, 376, 0.9989090017116583),
    (17.92207225595989, 12, 33, 4.1656531800429956e-11),
    (0.05949270100093007, 9, 2923, 0.9999589820501303),
    (7.4045318263600155, 11, 14, 0.00040942026486478534),
    (0.14715501429322822, 2, 10, 0.8649953688896376),
    (2.791519318246514, 6, 5, 0.13987922738323105),
    (12.35831560746749, 20, 5, 0.005528748161899118),
    (1.1023331232858864, 19, 22, 0.40967019091539547),
    (8.201402317088599, 11, 5, 0.015431361981329179),
    (4.058360034656221, 7, 39, 0.001982788551909806),
    (3.6542682016754364, 11, 72, 0.0003851904025280387),
    (0.1483454532087355, 8, 74, 0.9963939488586265),
    (0.4803222697497919, 5, 131, 0.7904384421056875),
    (0.12508978608962443, 6, 680, 0.9932913761665438),
    (0.12398443817384462, 14, 200, 0.9999595491230537),
    (0.3768554848743502, 3, 6, 0.7733682914528863),
    (0.23712564570627434, 18, 1605, 0.9996116323182016),
    (1.0885061575009127, 4, 115, 0.3656108329108409),
    (0.5308136215321271, 19, 3366, 0.9505431237958346),
    (0.07597758522001315, 11, 1068, 0.999979480116291),
    (7.787411583850412, 11, 3053, 1.885430851085296e-13),
    (0.4968879165597811, 10, 12, 0.8617673254651008),
    (1.8466815911597678, 20, 68, 0.03231909092143061),
    (0.930920784113874, 7, 105, 0.4859550116507152),
    (1.9671329351933475, 3, 328, 0.11873576628192148),
    (1.8549166637578216, 1, 1231, 0.17346181023749685),
    (0.09821481767173329, 3, 394, 0.960983343584567),
    (1.0122876903815077, 17, 168, 0.4474579530087729),
    (9.208663234019193, 13, 1387, 1.7188690567127746e-18),
    (11.218100259529137, 20, 2025, 2.1340663956748334e-34),
    (0.17120708408406993, 20, 7, 0.9991428979803808),
    (5.756452806448061, 6, 32, 0.00037625894777361494),
    (0.1602215207577976, 8, 47, 0.9950079563086528),
    (7.514366660058847, 13, 197, 5.855332261620434e-12),
    (0.535686799466066, 17, 159, 0.9315032295318006),
    (8.934301482640123, 11, 20, 1.5931968239764817e-05),
    (2.7587014659051463, 12, 15, 0.03323649190724988),
    (0.21985678218972152, 15, 11, 0.9960643413118601),
    (12.420178815759243, 6, 18, 1.4950458367321484e-05),
    (0.4993669707742346, 3, 13, 0.6891544039448639),
    (15.802899739445458, 4, 6, 0.0024365781362587695),
    (0.07283016414405633, 13, 776, 0.9999971400118804),
    (1.6970793500764134, 4, 137, 0.154182349881456),
    (0.6910675645728077, 13, 60, 0.7641650380587982),
    (0.2812097978130173, 11, 221, 0.9888332126515389),
];
