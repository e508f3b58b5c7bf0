// Generated by gen_physics.py (mpmath, 50 digits). Do not edit.

/// (f_khz, thorp_db_per_km)
pub const THORP: &[(f64, f64)] = &[
    (121.60621816820412, 38.6287113060589566152),
    (154.20465081023616, 44.18143773730324008099),
    (51.843912320397465, 18.27497320250945976195),
    (30.053059194832493, 8.304232775239429264386),
    (143.67684889557322, 42.49888972113243690596),
    (173.01425607744028, 47.04423561079214860577),
    (66.99786253889185, 24.34306204227219765898),
    (46.39717048578805, 15.85339271880946371997),
    (135.63202979507008, 41.15272060574102952332),
    (180.26570027917364, 48.11978251177563201904),
    (24.94025014944288, 6.079857154763055835803),
    (10.08244461244972, 1.20442848015267475164),
    (71.68948225974997, 26.00119290800214221997),
    (59.95927461911613, 21.65818043550299425763),
    (120.38631791865922, 38.39588403016580148864),
    (36.417168189900956, 11.23158478387359298468),
    (6.300499266192498, 0.5431374310584486838663),
    (65.40835657242546, 23.75755906290447503656),
    (47.05908511162506, 16.15304756743894994437),
    (60.2896441408225, 21.78951242832543977634),
    (83.07313497796751, 29.61250718430840620926),
    (42.10065536324978, 13.88072867594412782951),
    (194.75462347128652, 50.25133475163436636867),
    (124.39884232607278, 39.15283504244484238893),
];

/// (f_khz, wind, shipping, n_t, n_s, n_w, n_th, total)
pub const NOISE: &[(f64, f64, f64, f64, f64, f64, f64, f64)] = &[
    (109.66143553110994, 7.488067658630433, 0.9355102477181091, -44.20161780245861094467, -20.65875615792112984761, 29.65892198557837731387, 25.80107853497240729645, 31.15531009400284988609),
    (126.04488603265024, 4.931663700319266, 0.7108513717037974, -46.01575689755238704474, -27.20703164269202656087, 24.5899659202465246475, 27.01050459836825802983, 28.97704306425515079744),
    (141.78875533633123, 11.428443678984856, 0.3703697568093196, -47.54925370488497529438, -35.75393848935043263208, 32.27271163285919467298, 28.03283580325665019625, 33.66115124782130646312),
    (56.87293131020812, 16.679013850974947, 0.534217463069269, -35.64716838917227214063, -18.99618316014075290564, 45.41009709775818237894, 20.09811225944818142709, 45.4228615476304898262),
    (140.30478141145505, 13.73009876234342, 0.8182108690202565, -47.41217414479818482748, -26.64181771142781717603, 34.79970611826615827184, 27.94144942986545655165, 35.61370653934343657398),
    (100.0386032114438, 7.522874031996327, 0.32898937030304487, -43.0050285779802757095, -31.43372476163694454145, 30.49821942879837289312, 25.00335238532018380633, 31.57768327032419136192),
    (143.8804910965943, 13.976815867246762, 0.40620875627803055, -47.74005734482310382594, -35.2533224890431691628, 34.83091870223247959927, 28.16003822988206921729, 35.67752009587233087746),
    (14.751707635723795, 8.301674263914926, 0.717023510048756, -18.06526889521405406045, 4.54689341764770614248, 47.76785228489378109831, 8.376845930142702706966, 47.76855989700694593592),
    (50.00811589900956, 17.57905946072234, 0.11649083021737194, -33.97121477255628050543, -25.4531875148827639706, 47.32633297217859310121, 18.98080984837085367028, 47.3326852895811254811),
    (90.69386335362421, 13.680046647109076, 0.06227981893446688, -41.72733706765021398655, -35.32067030999924395977, 38.51190350539418784846, 24.1515580451001426577, 38.66818687503397215189),
    (99.25565205874697, 13.399797423277723, 0.7137469558085493, -42.90265740402212681198, -23.62261401000508825126, 37.44932783249797425593, 24.93510493601475120799, 37.68617700343656256245),
    (109.10277776932494, 14.045324952669011, 0.9751298391926043, -44.13507423750338176984, -19.79098477982556627468, 37.28753041915004025415, 25.75671615833558784656, 37.58256951570171373298),
    (136.88851445634327, 6.688688373115232, 0.5419954211815501, -47.09101031381781220567, -31.80228001239971718974, 26.61884598071216247905, 27.72734020921187480378, 30.2186668124149955731),
    (142.5397148243836, 4.966408735226935, 0.3593876240572935, -47.61807656739326262719, -36.0515513480721868779, 23.58668189048450828815, 28.07871771159550841812, 29.39960099428615990211),
    (115.89617878059049, 14.524617019852526, 0.4259309522646496, -44.92207351155800228377, -31.66647515086337717226, 37.24214620270132153947, 26.28138234103866818918, 37.57700234934367315211),
    (7.314100294647852, 15.333450011313763, 0.9157847905627159, -8.924827339262918227384, 18.82756355491075389585, 61.16026903404802232859, 2.283218226175278818256, 61.16052888952285338292),
    (133.6879039349135, 14.861141033894532, 0.870838365142732, -46.78276342384991007809, -24.87621134708276698575, 36.3388710786365066358, 27.52184228256660671873, 36.87468946902428833841),
    (115.77084733824896, 5.254874677936925, 0.6243517378957616, -44.90797635840503824934, -27.68208996488966674881, 25.86073302573931603185, 26.27198423893669216623, 29.08153397713996417431),
    (68.34687743827006, 12.43875130472033, 0.6186545352270301, -38.04156033274512915003, -20.01877951494134976883, 39.65571495122427654178, 21.69437355516341943336, 39.72461670289311378275),
    (13.4515018511777, 17.175924323315318, 0.3143662910773002, -16.86312327201086248488, -2.148930550300639473698, 57.99842599124076837681, 7.575415514673908323256, 57.99846972968980457249),
    (66.11580802398959, 7.518336780139261, 0.07801410024854283, -37.60915929899541299764, -30.34191950061082180053, 34.05380059997342891976, 21.40610619933027533176, 34.28366638804200454571),
    (33.67046594342384, 9.861939385350617, 0.9824034095874048, -28.8174737903575726987, -2.301608851981093195557, 42.80265329451535579935, 15.5449825269050484658, 42.81094589736894835334),
    (103.90361405574163, 3.7128220773098897, 0.28504857139726436, -43.49891961357826631479, -32.87199332289617961172, 24.05215228633508273417, 25.33261307571884420986, 27.74970768513004576714),
    (9.13949945136659, 17.66611484048601, 0.5550636120121866, -11.82767233329891737142, 8.344517197468640724105, 61.56073292608471186098, 4.218448222199278247612, 61.56076184278811888445),
];

/// (range_m, k, f_khz, tl_db)
pub const TRANSMISSION_LOSS: &[(f64, f64, f64, f64)] = &[
    (4816.696057312195, 1.0513678767201662, 45.08999050509737, 112.2120184322171253692),
    (3787.37935103638, 1.7928346271488964, 67.69999345180506, 157.3150592987082264017),
    (4051.965914989845, 1.375239807154614, 89.09921359312611, 176.4854693176670781363),
    (490.0214653624138, 1.6956551394441302, 1.2634271885655268, 45.65998760902908383821),
    (3547.5629368848076, 1.1671345697109863, 32.9626137063806, 75.59306016822602873263),
    (4586.703077055722, 1.407181156955271, 91.02645383573613, 197.5028242511567911967),
    (2985.9701826439577, 1.0746706526480039, 59.9571703561861, 102.0139019054767405341),
    (2128.1633500834782, 1.9069352096002552, 8.862132024611693, 65.5063894535716215399),
    (4976.6535463418995, 1.413574550843725, 48.004381466268576, 134.7650359465375213035),
    (3193.095974718395, 1.2986540593116935, 78.731576817379, 135.8746789102976372108),
    (2076.0359524535056, 1.54254197450322, 84.98165224698614, 113.7938927131091657825),
    (445.7078666286641, 1.30390831730662, 31.066365293551556, 38.44654715424703160487),
    (1109.8687475238792, 1.7278289752866431, 38.92935606679169, 66.38422069668848644331),
    (3426.779137838499, 1.7752909660247298, 42.94011474769031, 111.6523188251774258621),
    (3328.592923230723, 1.4623279179922108, 3.5830816580971323, 52.32560350331883983269),
    (39.39280251315594, 1.839537933306214, 36.98019984273719, 29.8010887632494701784),
    (2857.8639008177593, 1.3159618422372865, 35.05644072033848, 75.76804613172514736708),
    (3593.817171978948, 1.5269561592791145, 93.82658271663327, 171.2818460941473248334),
    (2633.485521803988, 1.6236944203187853, 81.27521729617085, 132.1171530851345563987),
    (4076.7623931984076, 1.783203583567622, 85.7234959426823, 188.2163494520010759207),
    (2196.6132061179305, 1.611509934272771, 4.099354288011714, 54.49201574839107309378),
    (2600.2656792095313, 1.0540724979833742, 42.55493085713659, 72.63754889940325364756),
    (1422.279096649118, 1.786629386254124, 72.71647740872532, 93.80981904747863129192),
    (3388.369774592106, 1.2847352488623855, 19.1655298320179, 58.33370469206753416071),
];

/// (p_elec_w, efficiency, di_db, sl_db)
pub const SOURCE_LEVEL: &[(f64, f64, f64, f64)] = &[
    (1277.1604856692034, 0.8103718736124985, 0.8426412650059967, 201.7919395897026618425),
    (3144.68122169932, 0.6378761369872823, 1.9841295491222644, 205.8072593767428613819),
    (3809.600574818279, 0.9420328409824509, 2.9774547049141575, 209.326909574357952433),
    (527.1926779962205, 0.8282488474594699, 6.537906369433761, 203.7392084701631874234),
    (2484.550379887627, 0.7247744122683364, 15.594168045111676, 218.9486746441626482298),
    (1866.8449829594545, 0.18176730785681966, 7.845662678487411, 203.9519029978070991805),
    (2867.502191570569, 0.7030972763846493, 12.288069317977257, 216.1332610588827197727),
    (4450.43807905792, 0.5084428649611243, 18.75463818275936, 223.1010873836366440686),
    (2001.7852583030326, 0.11660618295979497, 14.159325654793191, 208.6407163133013250494),
    (1218.8951911456243, 0.7771193573757896, 14.617423926769447, 215.1819648332067018341),
    (4392.384174666624, 0.919107092046404, 5.794487935798651, 212.6551522896935469843),
    (833.6717690109882, 0.5576778410917876, 9.669014433347083, 207.1427992684902895942),
    (2909.277419215822, 0.7980930363698929, 7.177083987590884, 211.6354705634717781707),
    (4211.60071642858, 0.6558396992473904, 12.208787994031173, 217.4212369210992665777),
    (50.66422890570207, 0.6639765909935579, 2.3980562494813773, 188.466598304059749336),
    (4333.773654060765, 0.05364541009640633, 16.73880711311834, 211.2027950603149439003),
    (3460.0902223688795, 0.5713366020371372, 13.664208651854096, 217.4240033595881945566),
    (4684.121829955485, 0.9259694684367271, 18.513508633031982, 225.6857571260088787469),
    (4992.20150793752, 0.6347370581354882, 19.87079971005925, 225.6796593279455411903),
    (1350.9213035697305, 0.33207284835178286, 3.2919198321157106, 200.6105540096317185355),
    (3476.462957120304, 0.8546354534486227, 0.967496495850726, 206.496681607787544543),
    (4273.2243005634255, 0.17698855638377048, 14.711020082418859, 214.2980288460163220117),
    (2371.803165241099, 0.7463110364919938, 11.92571135477393, 215.2056964382366702725),
    (3226.8125665093394, 0.5206228109273003, 5.863142710956839, 208.9161120335612442241),
];

/// (snr_db, rho_db, v_ind)
pub const INDUCED_VOLTAGE: &[(f64, f64, f64)] = &[
    (-5.235329628801843, -118.88983630302144, 6.219302821895117255705e-7),
    (89.94934841501559, -96.03817195975266, 0.4960881152115828707926),
    (98.21542840460718, -132.56147725698838, 0.01917333045159200746117),
    (91.02956837736849, -5.67901608850633, 18515.16618415437344793),
    (-9.543445184326815, -100.55920353980066, 0.000003125126228202797422669),
    (46.56018533371386, -101.17074167421791, 0.001859825435602860569956),
    (-6.774588223782171, -82.59165366769439, 0.00003401636519753363247487),
    (61.16666168927473, -18.286058296408612, 139.3253586361876869696),
    (29.02799463535601, -55.81858834206119, 0.04575834566105730026582),
    (22.659716098837386, -68.06630888270712, 0.005366243319216259971463),
    (28.536976121195003, -95.26262446196799, 0.0004610176822136713104564),
    (55.603451763053826, -168.89901183578326, 0.000002163824313456815403819),
    (68.20632892299656, -107.31550984186065, 0.01108003045357495352683),
    (57.59648859031891, -27.864651763497278, 30.66139014962520687132),
    (119.64338948283586, -111.02703757463898, 2.696606614154191347754),
    (34.0320216404131, -57.16246778432091, 0.06973931749083830869448),
    (103.80926152335844, -173.02214179600736, 0.0003462230567436663773652),
    (21.45240453087922, -28.42421232305304, 0.4481357698970586416818),
    (73.86062643545111, -168.82912557628927, 0.00001784740352174814163798),
    (53.20609603637003, -16.12370374428332, 71.46931417602139298071),
    (93.1681584763966, -8.17074627194117, 17777.49684440139126053),
    (77.0027026772458, -108.49525624890607, 0.02663007082085434052347),
    (47.12600099164875, -52.39178547192526, 0.5453945275986308762232),
    (-17.064939667004264, -5.209562001761071, 0.0769617468429885411603),
];

/// (snr_db, rho_db, elements, efficiency, r_load, power_w)
pub const HARVESTABLE_POWER: &[(f64, f64, u32, f64, f64, f64)] = &[
    (81.45698952553246, -46.3584404862211, 9, 0.22995927712030767, 333.3543125914138, 5.02090817521509148009),
    (47.48234691549939, -182.23636105834606, 11, 0.7803314922659003, 266.5551541464877, 2.694159661582511421363e-16),
    (-2.613743172678941, -158.25767937723893, 7, 0.16368325828832733, 423.6533153268422, 5.532092661947605150645e-20),
    (15.996804322383213, -82.59351771222339, 7, 0.44353552169867644, 299.44261264139027, 5.675204474254206752815e-10),
    (105.39400808933573, -163.88106948146117, 11, 0.6561561814488894, 67.03367603258502, 3.813649210640689975109e-8),
    (-3.717359687433298, -131.66608475123402, 5, 0.8108615391104471, 223.7818577880112, 1.311255719675517835158e-16),
    (-2.667848641519324, -98.16234998667859, 15, 0.5813435216431923, 376.2376792951169, 4.786102057211578715282e-13),
    (107.80161162102831, -15.125733650064603, 11, 0.1852825107681375, 131.63863576813853, 7167563.435515254598017),
    (108.71232633761613, -41.61045975290921, 2, 0.9273731330041628, 196.3484544614028, 12116.68131356055213188),
    (115.40670338256555, -143.48159029268544, 14, 0.36666668372453615, 2.1958582478394253, 0.0009104298804301732524202),
    (42.30886475158085, -10.358238681709508, 1, 0.418578833049049, 412.866960067169, 0.397163883825077052028),
    (55.29156549267381, -61.434520744075314, 14, 0.6495362841682415, 383.0362160748805, 0.001442567345957668154918),
    (24.287429901369208, -117.04087123883508, 13, 0.06593869454540567, 372.449633978885, 3.052193197888843818105e-13),
    (100.1766057996803, -199.77592909402748, 8, 0.9264226846531631, 157.5708001031968, 1.289528980372938608957e-12),
    (104.945586730938, -86.20791280197679, 5, 0.37165801933251563, 345.24150206731053, 0.1006231518022076710014),
    (45.522866980779014, -53.2229348094254, 13, 0.8397108326734875, 19.202660643733594, 0.02413486794876850194024),
    (25.12021277435027, -115.45646545992132, 3, 0.8268791124161804, 97.67824571225563, 5.875978054985507814204e-12),
    (39.82840092968624, -176.04140079387855, 2, 0.5601576972292713, 366.02244623921763, 1.830090669253886848031e-17),
    (48.42078226842075, -128.08872416800546, 14, 0.11879862096717757, 143.57901232169147, 3.126038282341147761326e-11),
    (74.50681785900763, -75.15279872837954, 2, 0.1539948540306064, 445.12384315052924, 0.0001490724083838092909828),
    (83.02433228953134, -44.195780318027374, 6, 0.37557492333867015, 353.69941983709134, 12.16210352983712004375),
    (26.442972400608724, -37.0367899854792, 16, 0.15600928116233131, 184.40710358691067, 0.0002951555962615302383635),
    (72.11459563741994, -192.50972211177194, 13, 0.31181623901233274, 167.53266353965856, 5.522935219800021790887e-15),
    (2.921020451745079, -195.78604916153103, 12, 0.44916364963603733, 348.96174553549235, 1.996388985556549479956e-22),
];

/// (cd, area, density, speed, beta, drag_n, prop_w)
pub const PROPULSION: &[(f64, f64, f64, f64, f64, f64, f64)] = &[
    (1.3548977896717125, 0.3467760206049618, 997.3545113607988, 2.0999174612261444, 0.14820740262506188, 6971.234744028968842221, 14639.01756529280286005),
    (0.5722668979196348, 0.08328946752765158, 998.8791482297956, 2.8427154938579062, 0.7609877376527322, 252.7905280280256379887, 718.6115507257897806083),
    (0.11084967964535697, 1.2832928410000302, 992.8743040681629, 0.45562255287263764, 0.5266644297405094, 27.83562184756447349869, 12.682537086984691757),
    (1.0416417696482498, 1.7395336591413337, 1033.3580611077782, 0.5451469054042004, 0.38958720830950777, 714.1582748472818230436, 389.3211735017980938516),
    (0.46286917150230916, 0.5359341486921653, 1024.8412608984702, 1.8236066724360585, 0.39164236298922805, 1079.366602563932283909, 1968.340138440226201156),
    (1.1155692185788242, 0.47095780205309173, 1016.9669752729466, 0.1900266648692266, 0.8440346067857838, 11.42942050506442047302, 2.171894659965343253169),
    (1.248842755690031, 0.6940231222773653, 1049.9059397757017, 0.6606940366652, 0.2819081358754366, 704.523136428671797698, 465.4742349310865864928),
    (0.07067632652672415, 1.9998240582136937, 1003.3277695487702, 1.3314835526991302, 0.5286145153478005, 237.7996012637909001467, 316.6262579211488795041),
    (0.7296782128154008, 0.6705492149344561, 1005.5710900524689, 3.458470957247937, 0.7278702187930866, 4042.58477826859104093, 13981.16204785451320253),
    (1.4452363090194185, 1.8934280085655544, 997.3487030876897, 2.625995197883206, 0.8720275677183056, 10791.0159170886277174, 28337.15597855597661327),
    (0.7625619409325662, 1.3451219717059657, 999.0467743974184, 3.8936437932838137, 0.2331739190880464, 33313.86969493468625247, 129712.3419679481772868),
    (0.2362766847306822, 1.01748475987192, 1008.8462505941471, 3.4342786950746134, 0.21860683446450374, 6542.611097528663243941, 22469.14990240142178936),
    (0.6735029493883168, 1.6415744098158194, 1020.417059762807, 2.3336849523651315, 0.9433163388956362, 3256.67848693915635128, 7600.061579661153617511),
    (1.3538448206199205, 0.7891469103579479, 1028.3504004553718, 1.3985313685399676, 0.856307828182445, 1254.736072397214278037, 1754.787756486139949298),
    (1.2145886529209227, 1.9753321364793082, 1040.5498001929798, 2.1395300024192854, 0.5360755802709098, 10658.91406374864379829, 22805.06643259909104003),
    (1.4658563006808203, 0.191391882974174, 994.183602117891, 1.4148550950069796, 0.1728117857260817, 1615.481844114813836219, 2285.67271803711553823),
    (1.2809305031272729, 0.7542671076171259, 1034.9092753835243, 3.7783463181299397, 0.17383533097290987, 41057.12135793712588425, 155128.0233157758496924),
    (1.0915088041363858, 0.687420540767583, 1020.3797923745954, 3.1606788770694934, 0.3406196265264192, 11227.23159750094564653, 35485.6737581884233888),
    (0.24849118749159405, 1.3996506803824134, 993.3968812976142, 2.8343271282412066, 0.4195963029786389, 3307.438228235968690758, 9374.361895271237575316),
    (0.261829743821224, 1.8345839800116144, 1009.1813172073548, 3.4915164791330495, 0.8028558247359242, 3680.32704953459853115, 12849.92254204916572594),
    (0.3887027323021717, 1.3330558836439956, 996.4745216640581, 1.1790902051131422, 0.6026063866699928, 595.6106926800123692935, 702.2787337996564880262),
    (0.13203392239803752, 1.0015581239536595, 1046.8874527140306, 2.3371390956886278, 0.14548439748027403, 2598.86896687495427349, 6073.918267055369028058),
    (0.14494691663404013, 0.6371567736119034, 1009.6432614916775, 2.019976212753865, 0.5347116589937175, 355.7673574360238818501, 718.6415992950701121147),
    (0.7932917663476542, 0.1882928972465163, 996.4596966661549, 0.5228663447363797, 0.2426660935529217, 83.84340453418066247973, 43.83889445904064710413),
];
