#pragma once
// Generated by tests/oracles/make_oracles.py (mpmath, 80 digits). Do not edit.
#include <array>

namespace oracle {
struct MlCase { double alpha, beta, gamma, x, value; };
inline constexpr std::array<MlCase, 15> kMittagLeffler{{
    {0.5, 1, 1, -1, 4.2758357615580700441e-1},
    {0.5, 1, 1, -10, 5.6140992743822585858e-2},
    {0.7, 1, 1, -2.5, 1.6863128667619575153e-1},
    {0.9, 1, 1, -40, 2.743449697792099487e-3},
    {0.3, 1, 1, -3, 2.1180263319643578203e-1},
    {0.7, 3.1, 4, -2.5, 9.5908437227394540439e-3},
    {0.5, 1.5, 2, -10, 5.5593122190608567458e-3},
    {0.6, 1.2, 1.5, 3.0, 2.1564350545952440312e+3},
    {0.8, 0.9, 2.5, 1.7, 5.5574009039648840099e+1},
    {0.7, 45.8, 65, -6.2, 9.3944761083922534643e-68},
    {0.5, 21.0, 41, -30, 9.6924920219614946012e-62},
    {0.95, 1, 1, -50, 1.0672340392208429699e-3},
    {1.0, 2, 10, -20, -6.1941119786273930155e-7},
    {1.0, 1, 3, -5, 2.3582814496799134838e-2},
    {0.4, 2.0, 1.0, -7.5, 1.3175599505530069014e-1},
}};

// geometric(1.0, 0.5), alpha=0.6, t=1.5
inline constexpr std::array<double, 13> kPmfGeometricA06T15{{
    3.4563458859362179388e-1,
    1.3470223773702150817e-1,
    1.1200809124064401173e-1,
    9.1389126638412911952e-2,
    7.3360039921665061929e-2,
    5.8054652295187160511e-2,
    4.5366721102459133166e-2,
    3.5054021882793130573e-2,
    2.6811152242443146e-2,
    2.0317504582611701735e-2,
    1.5266599372103370087e-2,
    1.1382117121389203131e-2,
    8.4249142247921238716e-3,
}};

// finite(2.0, 1.0, 0.5), alpha=0.5, t=5.0
inline constexpr std::array<double, 21> kPmfFiniteA05T5{{
    1.2321394008789222559e-1,
    5.8853720262315536401e-2,
    5.6959357947463532156e-2,
    6.9588440046476893788e-2,
    5.9045079464599849119e-2,
    5.6068179737564465465e-2,
    5.4686502088380498921e-2,
    5.0431120908618664258e-2,
    4.7083442085286079393e-2,
    4.3933744997507859975e-2,
    4.0487676048126920243e-2,
    3.7229822239549830767e-2,
    3.4095370743154609379e-2,
    3.1046098449070628833e-2,
    2.8154751378961479947e-2,
    2.5423868056959079606e-2,
    2.28561415793333873e-2,
    2.0463851733655372208e-2,
    1.8247990241125106565e-2,
    1.620717821999834436e-2,
    1.433906413607428706e-2,
}};

// geometric(1.0, 0.5), alpha=0.7, t=5.0
inline constexpr std::array<double, 61> kPmfGeometricA07T5{{
    1.3365103539446919591e-1,
    7.4749870668166989718e-2,
    7.540336648321621288e-2,
    7.4427437738481495736e-2,
    7.2038381338526891445e-2,
    6.8497762109549571789e-2,
    6.4084404954838460268e-2,
    5.9071997046832219807e-2,
    5.3712746313649629203e-2,
    4.8226802303830368661e-2,
    4.2796686594697718322e-2,
    3.7565752594020333875e-2,
    3.2639640803514181893e-2,
    2.8089759312030079857e-2,
    2.3957952316512168676e-2,
    2.0261684095316451568e-2,
    1.699923499564903979e-2,
    1.4154562090708759553e-2,
    1.1701610420591912031e-2,
    9.6079671844501616272e-3,
    7.8378309401712043131e-3,
    6.3543233135449678643e-3,
    5.1212057351173781602e-3,
    4.1040825591319580816e-3,
    3.2711786947209644032e-3,
    2.5937782524633765022e-3,
    2.0464037172248701082e-3,
    1.6068051809996886999e-3,
    1.255817968597560776e-3,
    9.7713578755589081493e-4,
    7.570361146547649771e-4,
    5.8408533730240437939e-4,
    4.4884339159099749617e-4,
    3.4358130051243242033e-4,
    2.6202002624889887622e-4,
    1.9909525783903436205e-4,
    1.5074998023041153612e-4,
    1.1375472884271660561e-4,
    8.5554152014624691243e-5,
    6.4137727909022051012e-5,
    4.7932081286837345828e-5,
    3.5712211203800336897e-5,
    2.6528987463376875623e-5,
    1.9650435609312266588e-5,
    1.4514558181959559209e-5,
    1.0691698494423135954e-5,
    7.8547178664418505533e-6,
    5.7555120980804882728e-6,
    4.2066283090189317611e-6,
    3.0669540305654210496e-6,
    2.2306347296428368542e-6,
    1.6185340064998372283e-6,
    1.17168410620520388e-6,
    8.4628542777232949842e-7,
    6.0990504991422253836e-7,
    4.3859862659351875515e-7,
    3.1473993370201140669e-7,
    2.2539025103281946386e-7,
    1.6107775698401616897e-7,
    1.1488703218391284186e-7,
    8.1782173092973388166e-8,
}};

// finite(1.0,), alpha=0.5, t=1.0
inline constexpr std::array<double, 11> kPmfTfppA05T1{{
    4.2758357615580700441e-1,
    2.7321201478389856507e-1,
    1.5437156137190843934e-1,
    7.9226968941326750492e-2,
    3.7572296215290844422e-2,
    1.6661869090414362428e-2,
    6.9701423749588273312e-3,
    2.7690647758444385991e-3,
    1.050269399778597183e-3,
    3.819545280146314258e-4,
    1.3366297435279315144e-4,
}};

inline constexpr double kIncompleteBeta05_15_05 = 1.2853981633974483096;
inline constexpr double kIncompleteBeta2_3_07 = 7.6358333333333330536e-2;
inline constexpr double kIncompleteBeta07_17_0999 = 9.495142934349759432e-1;
inline constexpr double kLogMlTiny = -2.6886285156639144762e+2;
inline constexpr double kCovInverseStable05_1_4 = 8.8951203470659206005e-1;
inline constexpr double kCovInverseStable07_2_3 = 1.2411938257696368334;
inline constexpr double kCovInverseStable06_1_1e4 = 9.0052448997868222864e-1;

}  // namespace oracle
