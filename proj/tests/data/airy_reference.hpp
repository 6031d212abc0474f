// Frozen Airy reference values.  Generated by
// tests/oracles/airy_reference.py -- do not edit by hand;
// rerun the script to regenerate.
#pragma once

namespace airy_reference {

struct Row {
  double z;
  double ai;
  double aip;
  double bi;
  double bip;
};

inline constexpr Row kRows[] = {
    {-104.2, -0.019387532534512957, -1.79171906986203, 0.17551923673137648, -0.1974837487823481},
    {-101.3, 0.1676976317870432, 0.5961596188614006, -0.059191066997396395, 1.6876956414150768},
    {-88.5, 0.04326657633400654, 1.682029259506747, -0.1787846606798021, 0.40652293894476005},
    {-60.0, 0.07778782447711559, 1.4503455958642244, -0.1871968328829833, 0.6017623499162852},
    {-35.0, 0.13033638994602217, -1.1342272299930087, 0.1918760545743106, 0.7724538046794022},
    {-19.93, -0.10635615694526428, 1.0921055850280184, -0.24492468618784255, -0.4778874110031125},
    {-15.25, 0.09922245968139584, 1.0470656050576836, -0.2676978248138535, 0.3831058148982243},
    {-11.8, 0.13747955388507124, 0.9358978606553526, -0.2715771892434681, 0.466552108698689},
    {-9.7, 0.28023750191629776, 0.48628629123926626, -0.15379420877725236, 0.8689838765982116},
    {-8.35, -0.3040804925609707, 0.37503391376278805, -0.1328960044027625, -0.8828891826244184},
    {-8.0, -0.0527050503563862, 0.9355609381983065, -0.33125158075113786, -0.1594504978129814},
    {-7.6, 0.2782502348801975, 0.5467188190573473, -0.1949337564738762, 0.7609550918839111},
    {-6.2, -0.3564210736689614, -0.08106855619630456, 0.026790808965335984, -0.8869789620668281},
    {-5.1, 0.3095259962873177, 0.4945859983849365, -0.21208913156903622, 0.6894851284220517},
    {-3.7, -0.2820130618419314, -0.5827278036529582, 0.2923526100714521, -0.5246136149096833},
    {-2.9, -0.341905095672983, 0.42118281160364845, -0.26258499816469705, -0.6075182879710967},
    {-2.0, 0.22740742820168558, 0.618259020741691, -0.4123025879563985, 0.2787951669211695},
    {-1.3, 0.512272006041031, 0.17199180675377407, -0.07576964415034072, 0.5959297494090112},
    {-0.7, 0.5110003975750101, -0.14464128564332104, 0.2752680119878797, 0.5449991200691819},
    {-0.25, 0.41872461427545293, -0.24638918992017597, 0.5013998734692334, 0.4651514883371537},
    {0.0, 0.3550280538878172, -0.2588194037928068, 0.6149266274460007, 0.4482883573538264},
    {0.3, 0.2788064819550049, -0.2451463642190548, 0.7524855850873157, 0.48004902875244804},
    {0.9, 0.15188680364054435, -0.17276384346163468, 1.1198728131344473, 0.821903890307209},
    {1.7, 0.05432479273291947, -0.07737488952532504, 2.3194075069389246, 2.555849356900438},
    {2.5, 0.01572592338047049, -0.026250881035903232, 6.481660738460579, 9.421423317334302},
    {3.3, 0.0037872884268267547, -0.00714248778588474, 23.248303262941572, 40.20268512088453},
    {4.1, 0.0007736296637815978, -0.0016106114612269879, 101.84588752305106, 199.41806743320961},
    {5.0, 0.00010834442813607442, -0.0002474138908684625, 657.7920441711711, 1435.8190802179824},
    {6.5, 2.7958823432049136e-06, -7.231931466601793e-06, 22340.607718396997, 56062.49584252286},
    {7.3, 3.325137824437759e-07, -9.094540388833464e-07, 177225.05516442805, 472557.3863987031},
    {8.0, 4.6922076160992316e-08, -1.3414392979067865e-07, 1199586.00412446, 3354342.3127445388},
    {8.2, 2.6397418340282836e-08, -7.637532984186194e-08, 2106083.7099317005, 5964865.432423861},
    {9.1, 1.8242282535640281e-09, -5.5520373443859196e-09, 28927488.903264944, 86449372.3334492},
    {10.5, 2.2022745192834015e-11, -7.187696781451567e-11, 2230554441.1366954, 7173692245.283299},
    {12.0, 1.3931846888753607e-13, -4.854736554985309e-13, 329807225829.07416, 1135507502443.3708},
    {15.0, 2.1649625207379925e-18, -8.420567954017772e-18, 1.8982099567493588e+16, 7.319749203407011e+16},
    {20.0, 1.6916728686705404e-27, -7.586391625748354e-27, 2.103765049651104e+25, 9.381839336133965e+25},
    {28.0, 1.5523434483415925e-44, -8.228031752356182e-44, 1.9375655077502943e+42, 1.0235259546019761e+43},
    {40.0, 6.365742658552915e-75, -4.030017977600678e-74, 3.953139302438594e+72, 2.497707968170697e+73},
    {60.0, 2.7831487094969354e-136, -2.1569758112094737e-135, 7.382584191543099e+133, 5.715444898335451e+134},
    {85.0, 1.1879639661957382e-228, -1.0955977830378453e-227, 1.4531401808371136e+226, 1.3393013143021535e+227},
    {100.0, 2.6344821520881846e-291, -2.6351403616044097e-290, 6.041223996670201e+288, 6.039712745310603e+289},
    {104.0, 7.448752158292227e-309, -7.598056033156867e-308, 2.095173527033602e+306, 2.1361621950432753e+307},
};

}  // namespace airy_reference
