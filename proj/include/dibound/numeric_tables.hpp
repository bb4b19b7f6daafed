// Generated by `dibound tables`; regenerate rather than edit.
#pragma once

#include <array>

namespace dibound::tables {

inline constexpr std::array<double, 200> parity_chsh_beta = {
    1, 1.0020814751878044, 1.0041629503756091, 1.0062444255634135,
    1.008325900751218, 1.0104073759390224, 1.0124888511268271, 1.0145703263146315,
    1.0166518015024359, 1.0187332766902404, 1.020814751878045, 1.0228962270658495,
    1.0249777022536539, 1.0270591774414586, 1.029140652629263, 1.0312221278170675,
    1.0333036030048719, 1.0353850781926766, 1.037466553380481, 1.0395480285682854,
    1.0416295037560899, 1.0437109789438945, 1.045792454131699, 1.0478739293195034,
    1.0499554045073078, 1.0520368796951125, 1.0541183548829169, 1.0561998300707214,
    1.058281305258526, 1.0603627804463305, 1.0624442556341349, 1.0645257308219394,
    1.066607206009744, 1.0686886811975485, 1.0707701563853529, 1.0728516315731573,
    1.074933106760962, 1.0770145819487664, 1.0790960571365709, 1.0811775323243755,
    1.08325900751218, 1.0853404826999844, 1.0874219578877888, 1.0895034330755935,
    1.0915849082633979, 1.0936663834512024, 1.0957478586390068, 1.0978293338268115,
    1.0999108090146159, 1.1019922842024203, 1.104073759390225, 1.1061552345780294,
    1.1082367097658339, 1.1103181849536383, 1.112399660141443, 1.1144811353292474,
    1.1165626105170519, 1.1186440857048563, 1.120725560892661, 1.1228070360804654,
    1.1248885112682698, 1.1269699864560745, 1.1290514616438789, 1.1311329368316834,
    1.1332144120194878, 1.1352958872072925, 1.1373773623950969, 1.1394588375829013,
    1.1415403127707058, 1.1436217879585104, 1.1457032631463149, 1.1477847383341193,
    1.149866213521924, 1.1519476887097284, 1.1540291638975329, 1.1561106390853373,
    1.1581921142731419, 1.1602735894609464, 1.1623550646487508, 1.1644365398365553,
    1.1665180150243599, 1.1685994902121644, 1.1706809653999688, 1.1727624405877735,
    1.1748439157755779, 1.1769253909633823, 1.1790068661511868, 1.1810883413389912,
    1.1831698165267959, 1.1852512917146003, 1.1873327669024047, 1.1894142420902094,
    1.1914957172780138, 1.1935771924658183, 1.1956586676536229, 1.1977401428414274,
    1.1998216180292318, 1.2019030932170363, 1.2039845684048409, 1.2060660435926454,
    1.2081475187804498, 1.2102289939682542, 1.2123104691560589, 1.2143919443438633,
    1.2164734195316678, 1.2185548947194724, 1.2206363699072769, 1.2227178450950813,
    1.2247993202828857, 1.2268807954706902, 1.2289622706584948, 1.2310437458462993,
    1.2331252210341037, 1.2352066962219084, 1.2372881714097128, 1.2393696465975172,
    1.2414511217853219, 1.2435325969731263, 1.2456140721609308, 1.2476955473487352,
    1.2497770225365399, 1.2518584977243443, 1.2539399729121488, 1.2560214480999532,
    1.2581029232877579, 1.2601843984755623, 1.2622658736633667, 1.2643473488511714,
    1.2664288240389758, 1.2685102992267803, 1.2705917744145847, 1.2726732496023891,
    1.2747547247901938, 1.2768361999779982, 1.2789176751658027, 1.2809991503536073,
    1.2830806255414118, 1.2851621007292162, 1.2872435759170209, 1.2893250511048253,
    1.2914065262926298, 1.2934880014804342, 1.2955694766682386, 1.2976509518560433,
    1.2997324270438477, 1.3018139022316522, 1.3038953774194568, 1.3059768526072613,
    1.3080583277950657, 1.3101398029828704, 1.3122212781706748, 1.3143027533584792,
    1.3163842285462837, 1.3184657037340881, 1.3205471789218928, 1.3226286541096972,
    1.3247101292975016, 1.3267916044853063, 1.3288730796731107, 1.3309545548609152,
    1.3330360300487196, 1.3351175052365243, 1.3371989804243287, 1.3392804556121332,
    1.3413619307999376, 1.3434434059877423, 1.3455248811755467, 1.3476063563633511,
    1.3496878315511558, 1.3517693067389602, 1.3538507819267647, 1.3559322571145693,
    1.3580137323023738, 1.3600952074901782, 1.3621766826779826, 1.3642581578657873,
    1.3663396330535917, 1.3684211082413962, 1.3705025834292006, 1.3725840586170053,
    1.3746655338048097, 1.3767470089926142, 1.3788284841804188, 1.380909959368223,
    1.3829914345560277, 1.3850729097438321, 1.3871543849316366, 1.3892358601194412,
    1.3913173353072457, 1.3933988104950501, 1.3954802856828548, 1.3975617608706592,
    1.3996432360584636, 1.4017247112462681, 1.4038061864340725, 1.4058876616218772,
    1.4079691368096816, 1.410050611997486, 1.4121320871852907, 1.4142135623730951,
};

inline constexpr std::array<double, 200> parity_chsh_value = {
    0, 0.0067485692430046835, 0.013497138486010089, 0.02024570772901477,
    0.026994276972019452, 0.033742846215024137, 0.040491415458029541, 0.047239984701034229,
    0.053988553944038904, 0.060737123187043593, 0.067485692430048996, 0.074234261673053678,
    0.08098283091605836, 0.087731400159063763, 0.094479969402068459, 0.10122853864507314,
    0.10797710788807781, 0.11472567713108323, 0.12147424637408791, 0.12822281561709259,
    0.13497138486009727, 0.14171995410310267, 0.14846852334610736, 0.15521709258911207,
    0.16196566183211672, 0.16871423107512212, 0.1754628003181268, 0.18221136956113149,
    0.18895993880413692, 0.1957085080471416, 0.20245707729014628, 0.20920564653315094,
    0.21595421577615634, 0.22270278501916105, 0.22945135426216573, 0.23619992350517041,
    0.24294849274817581, 0.24969706199118047, 0.25644563123418518, 0.26319420047719061,
    0.26994276972019526, 0.27669133896319992, 0.28343990820620463, 0.29018847744921,
    0.29693704669221471, 0.30368561593521937, 0.31043418517822413, 0.31718275442122951,
    0.32393132366423416, 0.33067989290723887, 0.33742846215024425, 0.34417703139324896,
    0.35092560063625361, 0.35767416987925832, 0.36442273912226369, 0.37117130836526835,
    0.37791987760827311, 0.38466844685127777, 0.3914170160942832, 0.39816558533728785,
    0.40491415458029256, 0.41166272382329794, 0.41841129306630259, 0.4251598623093073,
    0.43190843155231196, 0.43865700079531744, 0.4454055700383221, 0.45215413928132681,
    0.45890270852433146, 0.46565127776733684, 0.47239984701034154, 0.4791484162533462,
    0.48589698549635163, 0.49264555473935628, 0.49939412398236094, 0.50614269322536565,
    0.51289126246837113, 0.51963983171137573, 0.52638840095438044, 0.53313697019738515,
    0.53988553944039053, 0.54663678405156491, 0.55339669037135419, 0.56016548679207534,
    0.56694340131203058, 0.5737306663109949, 0.58052751275398551, 0.58733417619246242,
    0.59415089254477216, 0.60097790006950269, 0.60781543918231984, 0.61466375288436326,
    0.62152308650927179, 0.62839368792545702, 0.63527580796938876, 0.64216970055952849,
    0.64907562251385498, 0.65599383417533819, 0.66292459819688343, 0.66986818262983272,
    0.67682485865498399, 0.68379489991178277, 0.6907785863725342, 0.69777620115950434,
    0.70478803242611177, 0.71181437186118934, 0.71885551783799961, 0.72591177276256469,
    0.7329834445606398, 0.74007084628415698, 0.74717429835547122, 0.75429412525228801,
    0.76143065920976505, 0.76858423910842255, 0.77575520956885247, 0.78294392381555145,
    0.79015074064110746, 0.79737602896249049, 0.80462016454790231, 0.81188353145667413,
    0.81916652335457707, 0.82646954275233409, 0.83379300168248038, 0.84113732247666118,
    0.84850293818697287, 0.85589029265560335, 0.86329984130121828, 0.87073205137830456,
    0.87818740263614559, 0.88566638872541115, 0.8931695168114353, 0.90069730719859065,
    0.90825029756269249, 0.91582904009192723, 0.92343410389313463, 0.93106607552115306,
    0.93872556027046405, 0.94641318278063791, 0.95412958683386528, 0.96187543994244595,
    0.96965142992977271, 0.97745826986252782, 0.98529669796766006, 0.99316747773454295,
    1.0010714025294618, 1.0090092940951743, 1.0169820066801127, 1.0249904270600994,
    1.0330354774552939, 1.0411181192397918, 1.0492393527057706, 1.0574002211153348,
    1.0656018138787666, 1.073845267539363, 1.0821317734983891, 1.0904625766433966,
    1.0988389835855501, 1.1072623639831505, 1.1157341580847238, 1.1242558805186045,
    1.1328291261342267, 1.1414555786055725, 1.1501370162222311, 1.1588753206924811,
    1.1676724859285688, 1.1765306296278204, 1.18545200408199, 1.1944390095801309,
    1.2034942097279184, 1.2126203487747713, 1.2218203711861422, 1.2310974426315644,
    1.2404549800898184, 1.2498966774239075, 1.2594265445106205, 1.2690489446051265,
    1.2787686495357127, 1.2885908926930785, 1.2985214416863915, 1.3085666838989023,
    1.3187337281527642, 1.3290305365350048, 1.3394660820375712, 1.3500505522051229,
    1.3607956085249322, 1.371714727250922, 1.382823648058205, 1.3941409833373823,
    1.4056890681703393, 1.4174951679239753, 1.4295932664118114, 1.4420268186114187,
    1.4548531935061171, 1.4681513408817659, 1.4820361071646073, 1.4966881365477591,
    1.5124270171539029, 1.5299392777897209, 1.5513298743380304, 1.600844481630004,
};

inline constexpr std::array<double, 200> chsh_beta = {
    2, 2.0041629503756089, 2.0083259007512182, 2.0124888511268271,
    2.0166518015024359, 2.0208147518780448, 2.0249777022536541, 2.029140652629263,
    2.0333036030048719, 2.0374665533804808, 2.0416295037560901, 2.045792454131699,
    2.0499554045073078, 2.0541183548829172, 2.058281305258526, 2.0624442556341349,
    2.0666072060097438, 2.0707701563853531, 2.074933106760962, 2.0790960571365709,
    2.0832590075121797, 2.0874219578877891, 2.0915849082633979, 2.0957478586390068,
    2.0999108090146157, 2.104073759390225, 2.1082367097658339, 2.1123996601414428,
    2.1165626105170521, 2.120725560892661, 2.1248885112682698, 2.1290514616438787,
    2.133214412019488, 2.1373773623950969, 2.1415403127707058, 2.1457032631463147,
    2.149866213521924, 2.1540291638975329, 2.1581921142731417, 2.162355064648751,
    2.1665180150243599, 2.1706809653999688, 2.1748439157755777, 2.179006866151187,
    2.1831698165267959, 2.1873327669024047, 2.1914957172780136, 2.1956586676536229,
    2.1998216180292318, 2.2039845684048407, 2.20814751878045, 2.2123104691560589,
    2.2164734195316678, 2.2206363699072766, 2.224799320282886, 2.2289622706584948,
    2.2331252210341037, 2.2372881714097126, 2.2414511217853219, 2.2456140721609308,
    2.2497770225365397, 2.253939972912149, 2.2581029232877579, 2.2622658736633667,
    2.2664288240389756, 2.2705917744145849, 2.2747547247901938, 2.2789176751658027,
    2.2830806255414116, 2.2872435759170209, 2.2914065262926298, 2.2955694766682386,
    2.2997324270438479, 2.3038953774194568, 2.3080583277950657, 2.3122212781706746,
    2.3163842285462839, 2.3205471789218928, 2.3247101292975016, 2.3288730796731105,
    2.3330360300487198, 2.3371989804243287, 2.3413619307999376, 2.3455248811755469,
    2.3496878315511558, 2.3538507819267647, 2.3580137323023735, 2.3621766826779824,
    2.3663396330535917, 2.3705025834292006, 2.3746655338048095, 2.3788284841804188,
    2.3829914345560277, 2.3871543849316366, 2.3913173353072459, 2.3954802856828548,
    2.3996432360584636, 2.4038061864340725, 2.4079691368096818, 2.4121320871852907,
    2.4162950375608996, 2.4204579879365085, 2.4246209383121178, 2.4287838886877267,
    2.4329468390633355, 2.4371097894389449, 2.4412727398145537, 2.4454356901901626,
    2.4495986405657715, 2.4537615909413804, 2.4579245413169897, 2.4620874916925986,
    2.4662504420682074, 2.4704133924438167, 2.4745763428194256, 2.4787392931950345,
    2.4829022435706438, 2.4870651939462527, 2.4912281443218616, 2.4953910946974704,
    2.4995540450730798, 2.5037169954486886, 2.5078799458242975, 2.5120428961999064,
    2.5162058465755157, 2.5203687969511246, 2.5245317473267335, 2.5286946977023428,
    2.5328576480779517, 2.5370205984535605, 2.5411835488291694, 2.5453464992047783,
    2.5495094495803876, 2.5536723999559965, 2.5578353503316054, 2.5619983007072147,
    2.5661612510828236, 2.5703242014584324, 2.5744871518340418, 2.5786501022096506,
    2.5828130525852595, 2.5869760029608684, 2.5911389533364773, 2.5953019037120866,
    2.5994648540876955, 2.6036278044633043, 2.6077907548389136, 2.6119537052145225,
    2.6161166555901314, 2.6202796059657407, 2.6244425563413496, 2.6286055067169585,
    2.6327684570925673, 2.6369314074681762, 2.6410943578437855, 2.6452573082193944,
    2.6494202585950033, 2.6535832089706126, 2.6577461593462215, 2.6619091097218304,
    2.6660720600974392, 2.6702350104730486, 2.6743979608486574, 2.6785609112242663,
    2.6827238615998752, 2.6868868119754845, 2.6910497623510934, 2.6952127127267023,
    2.6993756631023116, 2.7035386134779205, 2.7077015638535293, 2.7118645142291387,
    2.7160274646047475, 2.7201904149803564, 2.7243533653559653, 2.7285163157315746,
    2.7326792661071835, 2.7368422164827924, 2.7410051668584012, 2.7451681172340106,
    2.7493310676096194, 2.7534940179852283, 2.7576569683608376, 2.7618199187364461,
    2.7659828691120554, 2.7701458194876643, 2.7743087698632731, 2.7784717202388824,
    2.7826346706144913, 2.7867976209901002, 2.7909605713657095, 2.7951235217413184,
    2.7992864721169273, 2.8034494224925361, 2.807612372868145, 2.8117753232437543,
    2.8159382736193632, 2.8201012239949721, 2.8242641743705814, 2.8284271247461903,
};

inline constexpr std::array<double, 200> chsh_value = {
    0, 0.0031793962504411688, 0.0065066228451085006, 0.0099319575161505025,
    0.013437836216825372, 0.017014170722853494, 0.02065419165915483, 0.024352956269546144,
    0.02810665576494964, 0.031912242987624295, 0.035767211861601367, 0.03966945689600021,
    0.043617179740513823, 0.047608822629949255, 0.051643022026421348, 0.0557185719867338,
    0.059834398747725226, 0.06398953829585674, 0.068183121701018368, 0.072414360117970089,
    0.076682535213630221, 0.080986990360745414, 0.085327122760728291, 0.08970237779241419,
    0.094112243288689834, 0.098556245868684389, 0.10303394683283851, 0.10754493827275891,
    0.11208884169778555, 0.11666530421750421, 0.12127399677482986, 0.12591461260243986,
    0.13058686511362561, 0.13529048670915067, 0.14002522705452347, 0.14479085248548218,
    0.14958714427378583, 0.15441389827518648, 0.15927092333282111, 0.16415804150380386,
    0.16907508634795942, 0.17402190296699827, 0.17899834719488594, 0.18400428489616738,
    0.18903959146619098, 0.19410415203678721, 0.19919786035285414, 0.20432061869057117,
    0.20947233716495495, 0.21465293382866513, 0.21986233489148233, 0.22510047297248326,
    0.23036728836023812, 0.23566272758682816, 0.24098674448624968, 0.24633929872180937,
    0.25172035645333335, 0.25712989007049492, 0.26256787790172287, 0.26803430351923252,
    0.27352915714946691, 0.27905243381911027, 0.28460413468328061, 0.29018426589743962,
    0.29579283930688915, 0.30142987130657684, 0.30709538462458985, 0.31278940618766393,
    0.31851196847103158, 0.32426310909515044, 0.33004287039900149, 0.33585130015226528,
    0.34168845051341235, 0.34755437945794332, 0.3534491494131814, 0.35937282781865243,
    0.36532548736188075, 0.37130720558609409, 0.37731806472207374, 0.38335815278721586,
    0.38942756265789469, 0.39552639143506463, 0.40165474304244764, 0.40781272484478714,
    0.41400045094716853, 0.42021803991628737, 0.42646561608945766, 0.43274330887572154,
    0.43905125363155606, 0.44538959122383481, 0.4517584680366592, 0.45815803671568534,
    0.46458845490694922, 0.47104988736729214, 0.47754250451091207, 0.48406648261450724,
    0.49062200512039, 0.4972092616604239, 0.50382844811997185, 0.51047976770117243,
    0.5171634307805355, 0.52387965452628193, 0.53062866361847538, 0.5374106900428568,
    0.54422597409374207, 0.55107476368986763, 0.55795731478562605, 0.56487389231499785,
    0.57182476928004877, 0.57881022812795391, 0.58583056035781567, 0.59288606711654701,
    0.59997705938226065, 0.60710385838512604, 0.61426679533072637, 0.6214662134065061,
    0.62870246623181236, 0.63597591965189681, 0.64328695115931622, 0.65063595112627826,
    0.65802332322412305, 0.66544948429813289, 0.67291486574934856, 0.68041991314324668,
    0.68796508802370882, 0.69555086736672522, 0.70317774481508621, 0.71084623214788223,
    0.71855685851531925, 0.72631017212127458, 0.73410674115121211, 0.74194715474460737,
    0.74983202355078138, 0.7577619813034272, 0.76573768568373024, 0.77375981929021986,
    0.78182909101505094, 0.78994623866098934, 0.79811202806421955, 0.80632725677169736,
    0.81459275536794684, 0.82290938748820053, 0.83127805492846263, 0.83969969724222737,
    0.84817529524361734, 0.85670587320965463, 0.86529250124345081, 0.87393629940514184,
    0.8826384398033571, 0.89140014980815685, 0.90022271739835991, 0.90910749414366965,
    0.91805589999736381, 0.92706942850561747, 0.93614965166918074, 0.94529822734602664,
    0.95451690454548177, 0.9638075316102539, 0.97317206427187253, 0.982612574972616,
    0.99213126183328504, 1.0017304628453578, 1.0114126658831102, 1.0211805240410019,
    1.0310368728723409, 1.0409847476549698, 1.0510274042658629, 1.0611683448929168,
    1.0714113436609163, 1.081760479443848, 1.0922201721024631, 1.1027952259146319,
    1.1134908790387192, 1.1243128630976251, 1.1352674729377947, 1.1463616500937812,
    1.1576030837780436, 1.1690003313577821, 1.1805629696044344, 1.1923017776170195,
    1.2042289648540523, 1.2163584647222681, 1.2287063045357389, 1.2412910855442021,
    1.2541346193418355, 1.2672627785017883, 1.2807066614843576, 1.294504221097998,
    1.3087025996558348, 1.3233615736090392, 1.3385587962553318, 1.3543980715066564,
    1.3710229344944735, 1.3886399318659246, 1.4075604613424249, 1.4282802818738596,
    1.4516450695958618, 1.4792723884130381, 1.5151917787634499, 1.6008346825914876,
};

}  // namespace dibound::tables
