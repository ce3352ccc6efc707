// Generated by tests/oracle/gen_reference.py (mpmath, 50 digits). Do not edit.
#pragma once
#include <array>
#include <complex>

namespace ref {

struct HypCase { std::complex<double> a, b; double c, z; std::complex<double> value; };
inline const HypCase hyp_cases[] = {
    {{5.0e-1, 1.0}, {5.0e-1, 1.0}, 1.0, 0.0, {1.0, 0.0}},
    {{5.0e-1, 0.0}, {5.0e-1, 0.0}, 1.0, 0.0, {1.0, 0.0}},
    {{1.5, 0.0}, {1.5, 0.0}, 2.0, 0.0, {1.0, 0.0}},
    {{1.5, 2.0}, {1.5, 2.0}, 2.0, 0.0, {1.0, 0.0}},
    {{-5.0e-1, 0.0}, {-5.0e-1, 0.0}, 1.0, 0.0, {1.0, 0.0}},
    {{-5.0e-1, 3.0}, {5.0e-1, 3.0}, 1.0, 0.0, {1.0, 0.0}},
    {{5.0e-1, 2.999999999999999889e-1}, {-5.0e-1, 2.999999999999999889e-1}, 1.0, 0.0, {1.0, 0.0}},
    {{-1.7912878474779199145, 0.0}, {-1.7912878474779199145, 0.0}, 1.0, 0.0, {1.0, 0.0}},
    {{5.0e-1, 0.0}, {2.000000000000000111e-1, 1.0}, 1.5, 0.0, {1.0, 0.0}},
    {{5.0e-1, 0.0}, {8.0000000000000004441e-1, -1.0}, 1.5, 0.0, {1.0, 0.0}},
    {{2.5, 0.0}, {5.0e-1, 0.0}, 1.0, 0.0, {1.0, 0.0}},
    {{5.0e-1, 1.0}, {5.0e-1, 1.0}, 1.0, 1.0e-1, {9.1472343226886297078e-1, 9.6733940294521708843e-2}},
    {{5.0e-1, 0.0}, {5.0e-1, 0.0}, 1.0, 1.0e-1, {1.0265120443783419217, 0.0}},
    {{1.5, 0.0}, {1.5, 0.0}, 2.0, 1.0e-1, {1.1255497424729559076, 0.0}},
    {{1.5, 2.0}, {1.5, 2.0}, 2.0, 1.0e-1, {8.5635810141892129282e-1, 2.8935621637520868227e-1}},
    {{-5.0e-1, 0.0}, {-5.0e-1, 0.0}, 1.0, 1.0e-1, {1.0251603167630737612, 0.0}},
    {{-5.0e-1, 3.0}, {5.0e-1, 3.0}, 1.0, 1.0e-1, {2.692161401191887368e-1, -1.0481371842454814396e-1}},
    {{5.0e-1, 2.999999999999999889e-1}, {-5.0e-1, 2.999999999999999889e-1}, 1.0, 1.0e-1, {9.6542241844729180838e-1, -5.4004825778543221055e-4}},
    {{-1.7912878474779199145, 0.0}, {-1.7912878474779199145, 0.0}, 1.0, 1.0e-1, {1.3258963980912652139, 0.0}},
    {{5.0e-1, 0.0}, {2.000000000000000111e-1, 1.0}, 1.5, 1.0e-1, {1.0058274450485439155, 3.4790629492038131303e-2}},
    {{5.0e-1, 0.0}, {8.0000000000000004441e-1, -1.0}, 1.5, 1.0e-1, {1.0270673568621871563, -3.6131080748494887379e-2}},
    {{2.5, 0.0}, {5.0e-1, 0.0}, 1.0, 1.0e-1, {1.1437363612330440752, 0.0}},
    {{5.0e-1, 1.0}, {5.0e-1, 1.0}, 1.0, 3.0e-1, {6.7559512976016709947e-1, 2.5173447133438586995e-1}},
    {{5.0e-1, 0.0}, {5.0e-1, 0.0}, 1.0, 3.0e-1, {1.0910959103627815664, 0.0}},
    {{1.5, 0.0}, {1.5, 0.0}, 2.0, 3.0e-1, {1.4893292171519397427, 0.0}},
    {{1.5, 2.0}, {1.5, 2.0}, 2.0, 3.0e-1, {2.2675465611609173307e-1, 6.2118150693957253677e-1}},
    {{-5.0e-1, 0.0}, {-5.0e-1, 0.0}, 1.0, 3.0e-1, {1.0765262728558544424, 0.0}},
    {{-5.0e-1, 3.0}, {5.0e-1, 3.0}, 1.0, 3.0e-1, {-1.8467202046362918024e-1, -3.8346072687094959215e-1}},
    {{5.0e-1, 2.999999999999999889e-1}, {-5.0e-1, 2.999999999999999889e-1}, 1.0, 3.0e-1, {8.9246967754509769014e-1, -5.5248634614223373867e-3}},
    {{-1.7912878474779199145, 0.0}, {-1.7912878474779199145, 0.0}, 1.0, 3.0e-1, {2.0078857597657189675, 0.0}},
    {{5.0e-1, 0.0}, {2.000000000000000111e-1, 1.0}, 1.5, 3.0e-1, {1.0105978683564767082, 1.1426211381403774857e-1}},
    {{5.0e-1, 0.0}, {8.0000000000000004441e-1, -1.0}, 1.5, 3.0e-1, {1.0823603468210921453, -1.2969573238376465671e-1}},
    {{2.5, 0.0}, {5.0e-1, 0.0}, 1.0, 3.0e-1, {1.6086609931515071563, 0.0}},
    {{5.0e-1, 1.0}, {5.0e-1, 1.0}, 1.0, 5.0e-1, {3.4322224889663877593e-1, 2.850944301248565173e-1}},
    {{5.0e-1, 0.0}, {5.0e-1, 0.0}, 1.0, 5.0e-1, {1.180340599016096226, 0.0}},
    {{1.5, 0.0}, {1.5, 0.0}, 2.0, 5.0e-1, {2.1574104047535174267, 0.0}},
    {{1.5, 2.0}, {1.5, 2.0}, 2.0, 5.0e-1, {-4.5058994209175690188e-1, 1.0566196972450555359e-1}},
    {{-5.0e-1, 0.0}, {-5.0e-1, 0.0}, 1.0, 5.0e-1, {1.1295229006964274697, 0.0}},
    {{-5.0e-1, 3.0}, {5.0e-1, 3.0}, 1.0, 5.0e-1, {-2.1038488961960150668e-1, -1.770108456880117696e-1}},
    {{5.0e-1, 2.999999999999999889e-1}, {-5.0e-1, 2.999999999999999889e-1}, 1.0, 5.0e-1, {8.1357733549909068464e-1, -1.7890569072683136938e-2}},
    {{-1.7912878474779199145, 0.0}, {-1.7912878474779199145, 0.0}, 1.0, 5.0e-1, {2.7302436514057048427, 0.0}},
    {{5.0e-1, 0.0}, {2.000000000000000111e-1, 1.0}, 1.5, 5.0e-1, {9.9956960334103889041e-1, 2.0983323561119601296e-1}},
    {{5.0e-1, 0.0}, {8.0000000000000004441e-1, -1.0}, 1.5, 5.0e-1, {1.1323550096734042246, -2.6718936558783040332e-1}},
    {{2.5, 0.0}, {5.0e-1, 0.0}, 1.0, 5.0e-1, {2.6524926677315536814, 0.0}},
    {{5.0e-1, 1.0}, {5.0e-1, 1.0}, 1.0, 5.5e-1, {2.5138477504624577911e-1, 2.5806379035724485336e-1}},
    {{5.0e-1, 0.0}, {5.0e-1, 0.0}, 1.0, 5.5e-1, {1.2088931441202062325, 0.0}},
    {{1.5, 0.0}, {1.5, 0.0}, 2.0, 5.5e-1, {2.4204838740811667083, 0.0}},
    {{1.5, 2.0}, {1.5, 2.0}, 2.0, 5.5e-1, {-4.4722941305492319129e-1, -1.7718939018878661921e-1}},
    {{-5.0e-1, 0.0}, {-5.0e-1, 0.0}, 1.0, 5.5e-1, {1.1430716736891815649, 0.0}},
    {{-5.0e-1, 3.0}, {5.0e-1, 3.0}, 1.0, 5.5e-1, {-2.5875705083907922399e-1, -1.1473972292049380243e-1}},
    {{5.0e-1, 2.999999999999999889e-1}, {-5.0e-1, 2.999999999999999889e-1}, 1.0, 5.5e-1, {7.9278261785462383736e-1, -2.2618199086851414157e-2}},
    {{-1.7912878474779199145, 0.0}, {-1.7912878474779199145, 0.0}, 1.0, 5.5e-1, {2.9171566313069879963, 0.0}},
    {{5.0e-1, 0.0}, {2.000000000000000111e-1, 1.0}, 1.5, 5.5e-1, {9.927481830676114347e-1, 2.3665543892197090468e-1}},
    {{5.0e-1, 0.0}, {8.0000000000000004441e-1, -1.0}, 1.5, 5.5e-1, {1.1416935505577436578, -3.1199608504416681498e-1}},
    {{2.5, 0.0}, {5.0e-1, 0.0}, 1.0, 5.5e-1, {3.1312836025245350308, 0.0}},
    {{5.0e-1, 1.0}, {5.0e-1, 1.0}, 1.0, 7.5e-1, {-1.6095410129613947608e-2, -8.6244933848089298514e-2}},
    {{5.0e-1, 0.0}, {5.0e-1, 0.0}, 1.0, 7.5e-1, {1.3728805006183501647, 0.0}},
    {{1.5, 0.0}, {1.5, 0.0}, 2.0, 7.5e-1, {4.5627955993646130885, 0.0}},
    {{1.5, 2.0}, {1.5, 2.0}, 2.0, 7.5e-1, {9.2337252512239698475e-1, -1.2302469660707751738e-1}},
    {{-5.0e-1, 0.0}, {-5.0e-1, 0.0}, 1.0, 7.5e-1, {1.1987443000354524953, 0.0}},
    {{-5.0e-1, 3.0}, {5.0e-1, 3.0}, 1.0, 7.5e-1, {-3.1604051165265041608e-1, -4.6080518159500208344e-2}},
    {{5.0e-1, 2.999999999999999889e-1}, {-5.0e-1, 2.999999999999999889e-1}, 1.0, 7.5e-1, {7.0480007370621340582e-1, -5.1900064202841550636e-2}},
    {{-1.7912878474779199145, 0.0}, {-1.7912878474779199145, 0.0}, 1.0, 7.5e-1, {3.6901718489086133554, 0.0}},
    {{5.0e-1, 0.0}, {2.000000000000000111e-1, 1.0}, 1.5, 7.5e-1, {9.3543541511853931782e-1, 3.5550645706358543431e-1}},
    {{5.0e-1, 0.0}, {8.0000000000000004441e-1, -1.0}, 1.5, 7.5e-1, {1.1347495832612369215, -5.6041076508552555483e-1}},
    {{2.5, 0.0}, {5.0e-1, 0.0}, 1.0, 7.5e-1, {8.4492555004424666901, 0.0}},
    {{5.0e-1, 1.0}, {5.0e-1, 1.0}, 1.0, 9.0e-1, {3.5369375243284857519e-1, -3.9380515174203159195e-1}},
    {{5.0e-1, 0.0}, {5.0e-1, 0.0}, 1.0, 9.0e-1, {1.6412644143423707333, 0.0}},
    {{1.5, 0.0}, {1.5, 0.0}, 2.0, 9.0e-1, {1.1982111053717458023e+1, 0.0}},
    {{1.5, 2.0}, {1.5, 2.0}, 2.0, 9.0e-1, {-1.6527908488543403621, -1.0036931218790799385}},
    {{-5.0e-1, 0.0}, {-5.0e-1, 0.0}, 1.0, 9.0e-1, {1.2425164362688082954, 0.0}},
    {{-5.0e-1, 3.0}, {5.0e-1, 3.0}, 1.0, 9.0e-1, {-3.1779595556104638184e-1, 5.4034016010976937509e-2}},
    {{5.0e-1, 2.999999999999999889e-1}, {-5.0e-1, 2.999999999999999889e-1}, 1.0, 9.0e-1, {6.3473672839900982391e-1, -9.3574635206447820024e-2}},
    {{-1.7912878474779199145, 0.0}, {-1.7912878474779199145, 0.0}, 1.0, 9.0e-1, {4.2966356932074130673, 0.0}},
    {{5.0e-1, 0.0}, {2.000000000000000111e-1, 1.0}, 1.5, 9.0e-1, {8.2883591606958157244e-1, 4.4198015932030704123e-1}},
    {{5.0e-1, 0.0}, {8.0000000000000004441e-1, -1.0}, 1.5, 9.0e-1, {9.4747113190025089458e-1, -8.5423024907879798015e-1}},
    {{2.5, 0.0}, {5.0e-1, 0.0}, 1.0, 9.0e-1, {4.610602413463709441e+1, 0.0}},
    {{5.0e-1, 1.0}, {5.0e-1, 1.0}, 1.0, 9.9e-1, {-2.1170665984012231257e-2, -1.9669572659575508973e-1}},
    {{5.0e-1, 0.0}, {5.0e-1, 0.0}, 1.0, 9.9e-1, {2.3527158167797426011, 0.0}},
    {{1.5, 0.0}, {1.5, 0.0}, 2.0, 9.9e-1, {1.2591402448345305899e+2, 0.0}},
    {{1.5, 2.0}, {1.5, 2.0}, 2.0, 9.9e-1, {1.7391785549506742861e+1, 7.4271593050540031112}},
    {{-5.0e-1, 0.0}, {-5.0e-1, 0.0}, 1.0, 9.9e-1, {1.27007600055398271, 0.0}},
    {{-5.0e-1, 3.0}, {5.0e-1, 3.0}, 1.0, 9.9e-1, {-3.0221303006524044747e-1, 1.0669004699310302063e-1}},
    {{5.0e-1, 2.999999999999999889e-1}, {-5.0e-1, 2.999999999999999889e-1}, 1.0, 9.9e-1, {5.9977393503739327504e-1, -1.3968833980012792826e-1}},
    {{-1.7912878474779199145, 0.0}, {-1.7912878474779199145, 0.0}, 1.0, 9.9e-1, {4.6715354504805562009, 0.0}},
    {{5.0e-1, 0.0}, {2.000000000000000111e-1, 1.0}, 1.5, 9.9e-1, {7.1924577267192381566e-1, 4.2552142724967823251e-1}},
    {{5.0e-1, 0.0}, {8.0000000000000004441e-1, -1.0}, 1.5, 9.9e-1, {4.3779761392497723615e-1, -7.171692382530027575e-1}},
    {{2.5, 0.0}, {5.0e-1, 0.0}, 1.0, 9.9e-1, {4.2767067738040017044e+3, 0.0}},
    {{5.0e-1, 1.0}, {5.0e-1, 1.0}, 1.0, 9.999e-1, {5.3453837819657259159e-1, -1.1641500415056091041e-1}},
    {{5.0e-1, 0.0}, {5.0e-1, 0.0}, 1.0, 9.999e-1, {3.814364242073590871, 0.0}},
    {{1.5, 0.0}, {1.5, 0.0}, 2.0, 9.999e-1, {1.2729535764534028964e+4, 0.0}},
    {{1.5, 2.0}, {1.5, 2.0}, 2.0, 9.999e-1, {1.8773209096158313416e+3, -2.7617042216091393317e+1}},
    {{-5.0e-1, 0.0}, {-5.0e-1, 0.0}, 1.0, 9.999e-1, {1.2732077175199649152, 0.0}},
    {{-5.0e-1, 3.0}, {5.0e-1, 3.0}, 1.0, 9.999e-1, {-3.0127013420379494548e-1, 1.1169514284272732331e-1}},
    {{5.0e-1, 2.999999999999999889e-1}, {-5.0e-1, 2.999999999999999889e-1}, 1.0, 9.999e-1, {6.0012475906488931742e-1, -1.4587494320414263673e-1}},
    {{-1.7912878474779199145, 0.0}, {-1.7912878474779199145, 0.0}, 1.0, 9.999e-1, {4.7132800902900258122, 0.0}},
    {{5.0e-1, 0.0}, {2.000000000000000111e-1, 1.0}, 1.5, 9.999e-1, {7.2283846025514770167e-1, 4.1662537294682388533e-1}},
    {{5.0e-1, 0.0}, {8.0000000000000004441e-1, -1.0}, 1.5, 9.999e-1, {6.5329919029369573381e-1, -7.2574541608885546323e-1}},
    {{2.5, 0.0}, {5.0e-1, 0.0}, 1.0, 9.999e-1, {4.2444502547845311082e+7, 0.0}},
};

struct LogGammaCase { std::complex<double> w, value; };
inline const LogGammaCase log_gamma_cases[] = {
    {{1.0, 0.0}, {0.0, 0.0}},
    {{5.0e-1, 0.0}, {5.7236494292470008707e-1, 0.0}},
    {{1.5, 0.0}, {-1.2078223763524522235e-1, 0.0}},
    {{2.999999999999999889e-1, 2.0}, {-2.3594493559375710212, -9.1690761351866975555e-1}},
    {{-2.5, 6.9999999999999995559e-1}, {-1.4941873089113575064, -8.6464756828033773445}},
    {{1.0e+1, 4.0e+1}, {-2.6780956023147975363e+1, 1.2136097759201601726e+2}},
    {{1.0000000000000000555e-1, -5.0e+1}, {-7.9185684608589472944e+1, -1.4497206505719842487e+2}},
    {{-5.0e-1, 0.0}, {1.2655121234846453965, -3.1415926535897932385}},
    {{3.0, 0.0}, {6.9314718055994530942e-1, 0.0}},
    {{1.0000000000000000208e-3, 2.0000000000000000416e-3}, {6.1024566441047244683, -1.1082998584608746549}},
    {{-7.2999999999999998224, -1.2e+1}, {-3.7802226439957016951e+1, -3.187877847504283692}},
    {{2.5e+1, 1.0}, {5.4764329724578614871e+1, 3.1990199209337577503}},
    {{5.0e-1, 1.0}, {-6.5279064420437291527e-1, -9.5500772434256910956e-1}},
    {{5.0e-1, -3.0}, {-3.7934504504362231734, -3.0981927108643916606e-1}},
    {{-5.0e-1, 3.0}, {-4.9057622261983900861, -1.4261257331230842915}},
    {{1.0, 2.000000000000000111e-1}, {-3.2476292318129071602e-2, -1.1230222264418367109e-1}},
    {{8.0000000000000004441e-1, -1.0000000000000000555e-1}, {1.4062571936072852635e-1, 9.5768661410913153541e-2}},
    {{2.0, -2.6300000000000001155e-1}, {-2.2207201474433482838e-2, -1.1240832530916994027e-1}},
    {{2.25, 1.0000000000000000555e-1}, {1.2208641992123709211e-1, 5.7305227449593588365e-2}},
    {{1.1000000000000000888, 2.5e-1}, {-9.3951163319559789092e-2, -1.0121384805972113382e-1}},
};

struct KernelCase { const char* kind; double ell, m_c, r, t, b; std::complex<double> value; };
inline const KernelCase kernel_cases[] = {
    {"E", 2.0, 2.6925824035672520156, 1.0000000000000000555e-1, 4.0, 1.0, {1.9243708053281825162e-1, 1.0311463421448347748}},
    {"E", 2.0, 2.6925824035672520156, 2.999999999999999889e-1, 5.0, 2.0, {3.850181087127468876, 5.0175796552048819387}},
    {"K1", 2.0, 2.6925824035672520156, 2.000000000000000111e-1, 3.0, 1.0, {5.4831338896165026983e-1, 1.0736158887125725746}},
    {"K0", 2.0, 2.6925824035672520156, 2.000000000000000111e-1, 3.0, 1.0, {1.2399279096618568861, -2.2266890941833158213e-1}},
    {"K0", 2.0, 2.0, 2.000000000000000111e-1, 3.0, 1.0, {7.1111111111111111111e-2, 0.0}},
    {"K1", 2.0, 2.0, 2.000000000000000111e-1, 3.0, 1.0, {5.3555555555555555556e-1, 0.0}},
    {"E", 2.0, 2.0, 1.0000000000000000555e-1, 4.0, 1.5, {1.257890625, 0.0}},
    {"K0", 2.0, 2.5, 2.000000000000000111e-1, 3.0, 1.0, {-5.8609189273237149652e-1, 0.0}},
    {"E", 2.0, 2.5, 5.0000000000000002776e-2, 1.0e+1, 1.0, {2.3540982783689573546, 0.0}},
    {"K0", 1.5, 1.0, 5.0e-1, 2.5, 1.0, {2.237362734844701847e-1, 0.0}},
};

struct GeodesicCase { double r_sch, r_id, lookback, r; };
inline const GeodesicCase geodesic_cases[] = {
    {1.0, 3.0, 1.0, 2.3748225281836233816},
    {1.0, 3.0, 7.5e-1, 2.5226771270916759056},
    {5.0e-1, 2.0, 9.0e-1, 1.3715014367618214117},
    {2.0, 5.0, 3.3333333333333333333e-1, 4.8027144535030693368},
};

inline constexpr double z1_l2_rs1_rid3 = 6.2517747181637661838e-1;
inline constexpr double tight_clearance = 5.6714329113357638638e-1;

}  // namespace ref
