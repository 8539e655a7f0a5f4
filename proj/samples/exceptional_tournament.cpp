// Enumerates the labeled tournaments of a given order (default 5) and prints
// one representative per isomorphism class of strong tournaments that have
// no Hamiltonian bypass.

#include <cstdlib>
#include <iostream>
#include <vector>

#include "hamlab/hamlab.hpp"

int main(int argc, char** argv) {
    using namespace hamlab;
    const int n = argc > 1 ? std::atoi(argv[1]) : 5;
    if (n < 3 || n > 8) {
        std::cerr << "order must lie in [3, 8]\n";
        return 2;
    }
    std::vector<Digraph> classes;
    std::vector<int> copies;
    TournamentEnumerator tournaments(n);
    while (auto item = tournaments.next()) {
        const Digraph& t = item->second;
        if (!is_strong(t) || hamiltonian_bypass(t)) continue;
        bool known = false;
        for (std::size_t i = 0; i < classes.size() && !known; ++i) {
            if (isomorphic_small(classes[i], t)) {
                ++copies[i];
                known = true;
            }
        }
        if (!known) {
            classes.push_back(t);
            copies.push_back(1);
        }
    }
    std::cout << classes.size() << " class(es) of strong bypass-free tournaments of order " << n << "\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::cout << "# " << copies[i] << " labeled copies; score sequence:";
        for (Vertex v = 0; v < n; ++v) std::cout << ' ' << classes[i].out_degree(v);
        std::cout << '\n' << serialize(classes[i]);
    }
}
