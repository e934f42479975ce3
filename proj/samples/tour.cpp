// A short walk through the library: products, super matrices, polynomials,
// and a structure report.

#include <natprod/natprod.hpp>

#include <iostream>

using namespace natprod;

int main() {
    const DomainTag Q = DomainTag::rationals();

    const Matrix a = parse_matrix("[6 1 2;0 3 4;2 1 0]", Q);
    const Matrix b = parse_matrix("[3 0 1;2 1 0;0 1 2]", Q);
    std::cout << "natural product  " << render_matrix(nproduct(a, b)) << "\n";
    std::cout << "usual product    " << render_matrix(uproduct(a, b)) << "\n";
    std::cout << "support of A     " << render_mask(support(a)) << "\n";

    const SuperMatrix x = parse_super("[1/8 | 7 5 | 3 2 4 -1]", Q);
    std::cout << "super inverse    " << render_super(super_inverse(x)) << "\n";

    const MatPoly p = parse_poly("[3 0;1 2] + [2 6;1 5] * x + [7 1;2 8] * x^2", Q);
    std::cout << "p'(x)            " << render_poly(poly_derivative(p)) << "\n";
    std::cout << "monic p          " << render_poly(monicize_natural(p)) << "\n";

    const RootSet roots = solve_binomial(parse_matrix("[1 1 1]", Q), parse_matrix("[4 9 25]", Q), 2);
    for (const auto& r : roots.roots) std::cout << "root             " << render_matrix(r) << "\n";

    const StructureReport rep = analyze(Carrier::all_matrices(Shape{1, 2}, DomainTag::mod(5)));
    std::cout << "Z_5 1x2 carrier  " << rep.size << " elements, " << rep.idempotents.size() << " idempotents";
    if (rep.smarandache) std::cout << ", group of order " << rep.smarandache->elements.size() << " inside";
    std::cout << "\n";
}
