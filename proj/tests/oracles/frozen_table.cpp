#include "oracles.hpp"

namespace domlab::oracle {

// name, graph6 as produced by networkx.to_graph6_bytes(header=False).
const std::vector<std::pair<std::string, std::string>>& frozen_graph6_table() {
    static const std::vector<std::pair<std::string, std::string>> table{
        {"petersen", R"g6(IheA@GUAo)g6"},
        {"k0", R"g6(?)g6"},
        {"k1", R"g6(@)g6"},
        {"k2", R"g6(A_)g6"},
        {"k4", R"g6(C~)g6"},
        {"k5", R"g6(D~{)g6"},
        {"k13", R"g6(Cs)g6"},
        {"c3", R"g6(Bw)g6"},
        {"c4", R"g6(Cl)g6"},
        {"c5", R"g6(Dhc)g6"},
        {"c6", R"g6(EhEG)g6"},
        {"c9", R"g6(HhCGGE@)g6"},
        {"p1", R"g6(@)g6"},
        {"p4", R"g6(Ch)g6"},
        {"p7", R"g6(FhCGG)g6"},
        {"prism", R"g6(E{Sw)g6"},
        {"cube", R"g6(Gr`HOk)g6"},
        {"k33", R"g6(EFz_)g6"},
        {"wheel5", R"g6(E|fG)g6"},
        {"double_star", R"g6(EsP?)g6"},
        {"theta(1,2,2)", R"g6(C})g6"},
        {"theta(2,3,4)", R"g6(G[U?IC)g6"},
        {"c40", R"g6(ghCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????K?????@)g6"},
        {"k12", R"g6(K~~~~~~~~~~~)g6"},
        {"p62", R"g6(}hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_)g6"},
        {"c63", R"g6(~??~hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????o?????????G)g6"},
        {"k64", R"g6(~?@?~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~)g6"},
        {"p100", R"g6(~?@chCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@??????????C??????????G??????????G??????????C??????????@???????????G???????????_??????????@???????????@????????????_???????????G???????????@????????????C????????????G????????????G????????????C????????????@?????????????G?????????????_????????????@?????????????@??????????????_?????????????G?????????????@??????????????C??????????????G??????????????G??????????????C??????????????@???????????????G???????????????_??????????????@???????????????@????????????????_???????????????G???????????????@)g6"},
    };
    return table;
}

}  // namespace domlab::oracle
