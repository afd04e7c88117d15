// Prints the Frobenius summands of Gr(2,4) for p = 5 and checks the rank sum.

#include "frobsum/frobsum.hpp"

#include <iostream>

int main()
{
    using namespace frobsum;

    const int n = 4;
    const int p = 5;

    const SummandList sheaf = decompose_grassmannian(p, n);
    write_text(std::cout, sheaf);

    const KanedaWitness kaneda = contains_kaneda(p, n);
    std::cout << "Kaneda collection contained: " << (kaneda.contained ? "yes" : "no") << '\n';

    // The ring-level list carries the grading; its Hilbert series matches R.
    const SummandList ring = decompose_ring(p, n);
    HilbertContext ctx(n);
    const int D = 30;
    const bool same = hs_of_summand_list(ring, D) == hs_R(ctx, D);
    std::cout << "Hilbert series agree to degree " << D << ": " << (same ? "yes" : "no") << '\n';
    return same && kaneda.contained ? 0 : 1;
}
