// Two vertices joined both ways with weight 1: the loop u -> v -> u is filled
// by the 2-simplex (u, v, u), at grade 1 + 1 under the 1-sum and at grade 1
// under the max.

#include <iostream>

#include <mrips/mrips.hpp>

int main()
{
    using namespace mrips;
    for (double p : {1.0, 2.0, kInf}) {
        const auto g = LGraph::from_matrix({{0, 1}, {1, 0}}, LatticeDescriptor::scalar(p));
        std::cout << "# p = " << io::format_number(p) << '\n';
        io::write_diagram(std::cout, persistence_diagram(g, 1));
    }
}
