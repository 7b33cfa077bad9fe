#include "axmul/cost_model.hpp"

namespace axmul {

// Static hardware catalog v1. Cell rows mirror fa_cells metrics (a test
// keeps both in sync). Compressor rows have no delay. Two repaired cells:
// the InXA3 delay is 1163 ps, the unique value consistent with its printed
// power/PDP pair, and the 16M2M2 size is 4564 = 1456 + 2*1162 + 784, the
// block-additive value every other composed design follows.
const char* const kEmbeddedCatalogCsv = R"(# axmul catalog v1
# name,class,delay_ps,power,power_unit,size,source_table
E,cell,244,763.3,nW,28,fa
M1,cell,195,612,nW,20,fa
M2,cell,366,561.1,nW,14,fa
M3,cell,360,558.1,nW,11,fa
M4,cell,196,587.1,nW,15,fa
M5,cell,150,412.1,nW,8,fa
X1,cell,1155,676.2,nW,8,fa
X2,cell,838,358.7,nW,6,fa
X3,cell,1467,396.5,nW,8,fa
In1,cell,740,410,nW,6,fa
In2,cell,832,355.1,nW,8,fa
In3,cell,1163,648,nW,6,fa
E:3-2,compressor,,0.562,uW,28,compressor
E:4-3,compressor,,1.469,uW,56,compressor
E:5-3,compressor,,1.659,uW,70,compressor
E:6-3,compressor,,1.466,uW,98,compressor
E:7-3,compressor,,1.355,uW,112,compressor
E:8-4,compressor,,2.198,uW,154,compressor
M1:3-2,compressor,,0.5474,uW,20,compressor
M1:4-3,compressor,,0.9696,uW,48,compressor
M1:5-3,compressor,,1.494,uW,54,compressor
M1:6-3,compressor,,0.9258,uW,74,compressor
M1:7-3,compressor,,1.138,uW,80,compressor
M1:8-4,compressor,,1.65,uW,122,compressor
M2:3-2,compressor,,0.4525,uW,14,compressor
M2:4-3,compressor,,1.224,uW,42,compressor
M2:5-3,compressor,,1.189,uW,42,compressor
M2:6-3,compressor,,1.536,uW,56,compressor
M2:7-3,compressor,,1.321,uW,56,compressor
M2:8-4,compressor,,1.609,uW,98,compressor
M3:3-2,compressor,,0.4489,uW,11,compressor
M3:4-3,compressor,,0.6813,uW,39,compressor
M3:5-3,compressor,,1.378,uW,36,compressor
M3:6-3,compressor,,1.073,uW,47,compressor
M3:7-3,compressor,,0.6157,uW,44,compressor
M3:8-4,compressor,,0.9114,uW,86,compressor
M4:3-2,compressor,,0.5228,uW,15,compressor
M4:4-3,compressor,,0.9988,uW,43,compressor
M4:5-3,compressor,,1.176,uW,44,compressor
M4:6-3,compressor,,1.183,uW,59,compressor
M4:7-3,compressor,,1.037,uW,60,compressor
M4:8-4,compressor,,1.449,uW,102,compressor
M5:3-2,compressor,,0.4802,uW,8,compressor
M5:4-3,compressor,,0.9333,uW,36,compressor
M5:5-3,compressor,,1.199,uW,30,compressor
M5:6-3,compressor,,1.023,uW,38,compressor
M5:7-3,compressor,,0.8753,uW,32,compressor
M5:8-4,compressor,,1.791,uW,74,compressor
X1:3-2,compressor,,0.4511,uW,8,compressor
X1:4-3,compressor,,1.586,uW,36,compressor
X1:5-3,compressor,,1.128,uW,30,compressor
X1:6-3,compressor,,1.562,uW,38,compressor
X1:7-3,compressor,,1.521,uW,32,compressor
X1:8-4,compressor,,2.142,uW,74,compressor
X2:3-2,compressor,,0.4584,uW,6,compressor
X2:4-3,compressor,,1.296,uW,34,compressor
X2:5-3,compressor,,1.563,uW,26,compressor
X2:6-3,compressor,,0.8141,uW,32,compressor
X2:7-3,compressor,,0.7489,uW,24,compressor
X2:8-4,compressor,,2.77,uW,66,compressor
X3:3-2,compressor,,0.3544,uW,8,compressor
X3:4-3,compressor,,1.349,uW,36,compressor
X3:5-3,compressor,,1.429,uW,30,compressor
X3:6-3,compressor,,1.231,uW,38,compressor
X3:7-3,compressor,,0.4742,uW,32,compressor
X3:8-4,compressor,,2.316,uW,74,compressor
In1:3-2,compressor,,0.1823,uW,6,compressor
In1:4-3,compressor,,1.569,uW,34,compressor
In1:5-3,compressor,,0.9423,uW,26,compressor
In1:6-3,compressor,,0.4842,uW,32,compressor
In1:7-3,compressor,,1.296,uW,24,compressor
In1:8-4,compressor,,2.413,uW,66,compressor
In2:3-2,compressor,,0.5018,uW,8,compressor
In2:4-3,compressor,,1.324,uW,36,compressor
In2:5-3,compressor,,2.114,uW,30,compressor
In2:6-3,compressor,,0.3441,uW,38,compressor
In2:7-3,compressor,,0.8087,uW,32,compressor
In2:8-4,compressor,,3.844,uW,74,compressor
In3:3-2,compressor,,0.5504,uW,6,compressor
In3:4-3,compressor,,1.345,uW,34,compressor
In3:5-3,compressor,,1.234,uW,26,compressor
In3:6-3,compressor,,0.7866,uW,32,compressor
In3:7-3,compressor,,1.636,uW,24,compressor
In3:8-4,compressor,,5.27,uW,66,compressor
EE,mult8_array,527,31.41,uW,1456,array8
EM1,mult8_array,527,24.17,uW,1288,array8
M1M1,mult8_array,865,14.75,uW,1072,array8
EM2,mult8_array,557,22.97,uW,1162,array8
M2M2,mult8_array,600,14.4,uW,784,array8
EM3,mult8_array,605,24.95,uW,1099,array8
M3M3,mult8_array,598,15.31,uW,640,array8
EM4,mult8_array,573,21.85,uW,1183,array8
M4M4,mult8_array,313,11.17,uW,832,array8
EM5,mult8_array,573,22.15,uW,1036,array8
M5M5,mult8_array,250,10.69,uW,496,array8
EX1,mult8_array,546,31.86,uW,1036,array8
X1X1,mult8_array,558,21.33,uW,496,array8
EX2,mult8_array,569,23.38,uW,994,array8
X2X2,mult8_array,250,13.91,uW,400,array8
EX3,mult8_array,536,25.54,uW,1036,array8
X3X3,mult8_array,197,15.06,uW,496,array8
EIn1,mult8_array,517,26.07,uW,994,array8
In1In1,mult8_array,403,14.82,uW,400,array8
EIn2,mult8_array,528,28.79,uW,1036,array8
In2In2,mult8_array,340,12.56,uW,496,array8
EIn3,mult8_array,556,27.96,uW,994,array8
In3In3,mult8_array,404,23.92,uW,400,array8
CEE,mult8_tree,508,21.98,uW,1218,tree8
CEM3,mult8_tree,537,19.65,uW,912,tree8
CM3M3,mult8_tree,560,16.27,uW,606,tree8
CEM5,mult8_tree,356,18.63,uW,858,tree8
CM5M5,mult8_tree,282,13.99,uW,498,tree8
CEX2,mult8_tree,525,23.52,uW,822,tree8
CX2X2,mult8_tree,513,22.6,uW,426,tree8
CEIn1,mult8_tree,505,25.12,uW,822,tree8
CIn1In1,mult8_tree,500,26.89,uW,426,tree8
16EE,mult16_array,514,156.8,uW,5824,array16
16EM1,mult16_array,534,130.1,uW,5320,array16
16M1M1,mult16_array,526,118.4,uW,5104,array16
16EM2,mult16_array,533,128.4,uW,4942,array16
16M2M2,mult16_array,477,116.5,uW,4564,array16
16EM3,mult16_array,519,131.6,uW,4753,array16
16M3M3,mult16_array,490,120.4,uW,4294,array16
16EM4,mult16_array,522,118.8,uW,5005,array16
16M4M4,mult16_array,506,105.1,uW,4654,array16
16EM5,mult16_array,533,119,uW,4564,array16
16M5M5,mult16_array,535,105.1,uW,4024,array16
16EX1,mult16_array,513,154.9,uW,4564,array16
16X1X1,mult16_array,520,138.5,uW,4024,array16
16EX2,mult16_array,521,138,uW,4438,array16
16X2X2,mult16_array,514,127.4,uW,3844,array16
16EX3,mult16_array,515,134,uW,4564,array16
16X3X3,mult16_array,518,121.8,uW,4024,array16
16EIn1,mult16_array,519,134.2,uW,4438,array16
16In1In1,mult16_array,408,121.7,uW,3844,array16
16EIn2,mult16_array,537,146.9,uW,4564,array16
16In2In2,mult16_array,500,126.4,uW,4024,array16
16EIn3,mult16_array,527,157.6,uW,4438,array16
16In3In3,mult16_array,412,153.2,uW,3844,array16
16CEE,mult16_tree,680,100.8,uW,4872,tree16
16CEM3,mult16_tree,663,93.57,uW,3954,tree16
16CM3M3,mult16_tree,693,90.6,uW,3648,tree16
16CEM5,mult16_tree,585,92.48,uW,3792,tree16
16CM5M5,mult16_tree,670,86.98,uW,3432,tree16
16CEX2,mult16_tree,685,115,uW,3684,tree16
16CX2X2,mult16_tree,671,114.3,uW,3288,tree16
16CEIn1,mult16_tree,516,112.5,uW,3684,tree16
16CIn1In1,mult16_tree,527,114.3,uW,3288,tree16
)";

}  // namespace axmul
