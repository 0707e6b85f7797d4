#pragma once

// Chebyshev coefficients (basis T_m(u), u = 2p - 1, p in [0,1]) for the
// Riemann-Siegel remainder terms C_0..C_5. Generated by
// scripts/gen_rs_cheb.py and validated there against mpmath.siegelz
// to ~1e-11 absolute over t in [4e3, 3e6]. Do not edit by hand.

namespace zz {

inline constexpr int kRsChebTerms = 6;
inline constexpr int kRsChebNodes = 41;

inline constexpr double kRsCheb[6][41] = {
    {
        0.6426672862397684,
        9.40616226738111e-29,
        0.27197299999785507,
        -2.2004773459279874e-29,
        0.010738605819340285,
        6.885421974887291e-30,
        -0.0013743815296336614,
        -2.0286571894710844e-30,
        -0.00012468221880320676,
        5.046401634929579e-31,
        -5.764599706783048e-07,
        -9.179694043322842e-32,
        2.728067429580452e-07,
        7.329549023842113e-33,
        8.07795305950047e-09,
        1.2614992035338038e-33,
        -2.0884608068869654e-10,
        -4.018675095672003e-34,
        -1.3115561854739528e-11,
        2.3408147715217985e-35,
        -1.4207987228087186e-14,
        3.991531556603089e-36,
        1.0271701357931162e-14,
        -3.7045514205059754e-37,
        1.3974598819518373e-16,
        -2.3743873903895454e-38,
        -4.4841187339522885e-18,
        1.8787605598350124e-39,
        -1.1830599573845289e-19,
        9.651691364320526e-41,
        9.389869560399935e-22,
        -4.5642406448638946e-42,
        5.601822847320697e-23,
        -2.4784593265017772e-43,
        1.0023543875611833e-25,
        5.881415618854421e-45,
        -1.7592985566214658e-26,
        4.017602005889168e-46,
        -1.4854499418667774e-28,
        -3.743637508873429e-48,
        3.7497489696895335e-30,
    },
    {
        2.7055839558872116e-27,
        0.010697913921003001,
        2.079187492105548e-27,
        0.017170651243377882,
        1.5188715444374186e-28,
        0.002793211149788471,
        -7.239285696156224e-29,
        -3.6375653719275045e-05,
        2.083423333398074e-30,
        -2.7108955231150888e-05,
        5.383355868086873e-30,
        -1.0483749866752774e-06,
        -2.4386199340791932e-30,
        5.886467166527572e-08,
        5.226950936665741e-31,
        4.322967268502779e-09,
        -4.2301362506178965e-32,
        -1.1369591588273712e-11,
        -5.1092934277380046e-33,
        -6.6998339103553274e-12,
        1.2305326538097413e-33,
        -1.0079997652808475e-13,
        -1.2144941381734846e-35,
        5.152488009222117e-15,
        -9.963032119261998e-36,
        1.521695447183697e-16,
        2.1046793796698917e-37,
        -1.8619464833687103e-18,
        4.0888682700013366e-38,
        -1.1301846184246265e-19,
        -7.407644079450692e-40,
        -9.650306476857102e-23,
        -9.974656264817323e-41,
        5.226610685427623e-23,
        1.3612525098871216e-42,
        4.630049054837973e-25,
        1.6044470805788902e-43,
        -1.6018105325332847e-26,
        -1.6105048669106523e-45,
        -2.659125452692948e-28,
        -1.8398734915646482e-46,
    },
    {
        0.0031461158539889122,
        5.376839194524456e-22,
        -0.0023087838845307503,
        -1.2579435962227934e-22,
        5.769820766689844e-05,
        3.9360179289697036e-23,
        0.000352388620236659,
        -1.1596616677568629e-23,
        2.5246667458684434e-05,
        2.8847449042534082e-24,
        -3.442821197193136e-06,
        -5.247597591550869e-25,
        -3.535074556622459e-07,
        4.1902741368493174e-26,
        3.730830183792625e-09,
        7.210410350467011e-27,
        1.2776951864116635e-09,
        -2.2971721315779968e-27,
        2.1874616204147057e-11,
        1.3381905519957982e-28,
        -1.914141096461037e-12,
        2.2815175860400436e-29,
        -6.562883102168523e-14,
        -2.1176521856818018e-30,
        1.2586009182411715e-15,
        -1.3571296831987294e-31,
        8.140076623881463e-17,
        1.0739407460854325e-32,
        -5.423874275488613e-20,
        5.5166191552031116e-34,
        -5.796980131086543e-20,
        -2.6089814148320917e-35,
        -5.382916503746394e-22,
        -1.4166244164803882e-36,
        2.6010080772401272e-23,
        3.3618260294633144e-38,
        4.666966773374361e-25,
        2.296356889685037e-39,
        -7.288923682887736e-27,
        -2.1401288241966767e-41,
        -2.2598346456818025e-28,
    },
    {
        2.8694425307071726e-21,
        7.123256221203828e-05,
        2.206488444155967e-21,
        0.00023234305298164818,
        2.8418206435432883e-22,
        -0.0001292991204547248,
        -1.2126976515262234e-22,
        1.807449641367145e-05,
        1.1842610604386299e-23,
        6.526185187220437e-06,
        4.347618297986577e-24,
        -1.1696365378521942e-07,
        -2.5882081909934635e-24,
        -7.34947612651813e-08,
        6.121624684168682e-25,
        -1.7750910077907132e-09,
        -5.89237567639658e-26,
        2.5555529613265446e-10,
        -4.207003071500806e-27,
        1.1376636600537187e-11,
        1.3978662210621186e-27,
        -3.3498638985304693e-13,
        -3.7276130014088966e-29,
        -2.5537379354162104e-14,
        -1.0277924435549213e-29,
        6.766500771333323e-17,
        3.992867375151188e-31,
        2.9768884719910663e-17,
        4.0024286249372656e-32,
        2.9952208087520365e-19,
        -1.4958091491376955e-33,
        -2.0461188497553078e-20,
        -9.767770247967128e-35,
        -4.0869264533169428e-22,
        3.18913026830236e-36,
        8.447612108785776e-24,
        1.6591837140408702e-37,
        2.830269034495175e-25,
        -4.4414807313658116e-39,
        -1.7160416312310403e-27,
        -2.1343283588165407e-40,
    },
    {
        0.00016765745246696733,
        2.3040781184151057e-16,
        -0.00022728768943416824,
        -5.3909470499948654e-17,
        6.477387188445679e-05,
        1.686707021689561e-17,
        -8.49220050012534e-06,
        -4.9694550835882316e-18,
        -2.616140724521916e-06,
        1.2361979916082192e-18,
        8.3367649687332e-07,
        -2.248785234984721e-19,
        6.324704037544947e-08,
        1.7958222017499244e-20,
        -1.0059949403001361e-08,
        3.089484732405272e-21,
        -7.822677204130025e-10,
        -9.843672926688373e-22,
        3.1676582853500025e-11,
        5.734795971802107e-23,
        3.5006944702046436e-12,
        9.776056632087613e-24,
        -1.4314814511418823e-14,
        -9.074490616186057e-25,
        -7.269402707917357e-15,
        -5.815034387611105e-26,
        -8.78055659485966e-17,
        4.601876383925957e-27,
        8.150254474938199e-18,
        2.3637807411005366e-28,
        1.9208397058311437e-19,
        -1.1179232792893104e-29,
        -5.1756552139129864e-21,
        -6.070053964168308e-31,
        -1.976773672463087e-22,
        1.440423422867133e-32,
        1.6059867171494989e-24,
        9.839550917810468e-34,
        1.2658675767574818e-25,
        -9.169371218453039e-36,
        2.1863400856747216e-28,
    },
    {
        3.282362337923233e-16,
        8.828845227510573e-05,
        2.527166972203225e-16,
        -1.562868495225148e-05,
        6.052549731559408e-17,
        -1.8342448231443943e-07,
        -2.3998591998544575e-17,
        2.109726789067875e-06,
        3.547132577077716e-18,
        -6.657016178012172e-07,
        1.8738721946773698e-19,
        2.7714741276301526e-08,
        -2.964963349042081e-19,
        1.8111249370076188e-08,
        8.31825316315901e-20,
        -5.765890821501678e-10,
        -9.940288469691618e-21,
        -1.8675033394902923e-10,
        -2.054706166469464e-22,
        -1.1051610733668419e-13,
        1.8102439750359156e-22,
        7.870643337091383e-13,
        -9.816031983721466e-24,
        1.4458351283092634e-14,
        -1.1100455865283161e-24,
        -1.5814591724419765e-15,
        8.574530665040913e-26,
        -4.91063897612731e-17,
        3.818168296054002e-27,
        1.6444200471938833e-18,
        -3.32731033284662e-28,
        7.778018271614957e-20,
        -9.328058548981021e-30,
        -7.932224956984181e-22,
        7.620378088816726e-31,
        -7.31265756372701e-23,
        1.8013743920032902e-32,
        -8.515705006421781e-26,
        -1.1307629858881851e-33,
        4.5075849336653487e-26,
        -2.82257864844093e-35,
    },
};

} // namespace zz
