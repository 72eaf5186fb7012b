#include "dot_export.hpp"

#include <sstream>

namespace edfforge {

std::string witness_to_dot(const EdfWitness& w) {
    std::ostringstream out;
    out << "digraph edf {\n";
    for (const ZSubset& s : w.family.sets())
        for (Residue e : s.elements())
            out << "  v" << e << " [label=\"" << e << "\"];\n";
    for (auto [i, j] : w.arcs)
        for (Residue x : w.family.sets()[i].elements())
            for (Residue y : w.family.sets()[j].elements())
                out << "  v" << x << " -> v" << y << " [label=\""
                    << reduce_mod(y - x, w.params.n) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace edfforge
