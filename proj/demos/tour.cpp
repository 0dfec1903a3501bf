// A short tour of the library: compile a term to a piecewise-linear map,
// run the Markov analysis, look at an exact orbit, and touch the product
// and boolean sides. Build and run:
//
//   cmake --build build --target subdyn_tour && ./build/demos/subdyn_tour

#include <iostream>

#include "subdyn/subdyn.hpp"

using namespace subdyn;

int main() {
    // The tent map is the substitution x0 -> !(!x0 * !x0) /\ !(x0 * x0).
    TermPtr term = parse("!( !x0 * !x0 ) /\\ !( x0 * x0 )");
    PLFunc tent = compile(term);
    std::cout << "term: " << to_string(term) << "\n";
    std::cout << "map:  " << json(tent).dump() << "\n\n";

    Analysis a = analyze_pl(tent);
    std::cout << "partition: " << json(a.system.partition.points).dump() << "\n";
    std::cout << "classification: " << json(a.classification).dump(2) << "\n\n";

    ExactOrbit orbit = iterate_exact(tent, Rat::parse("1/5"), 8);
    std::cout << "orbit of 1/5:";
    for (const Rat& p : orbit.points) std::cout << " " << p.str();
    if (orbit.cycle)
        std::cout << "  (preperiod " << orbit.cycle->first << ", period " << orbit.cycle->second
                  << ")";
    std::cout << "\n\n";

    // Product logic: q = 1 is the slow continued-fraction map.
    FracMap slow(1, 1);
    Rat x = Rat::parse("2/5");
    std::cout << "q=1 map at " << x.str() << ": " << frac_eval(slow, x).str()
              << ", digits of x: " << json(cf_expand(x)).dump()
              << ", identity holds: " << (slow_cf_check(x) ? "yes" : "no") << "\n\n";

    // Boolean side: the 3-variable adding machine is a single 8-cycle.
    BoolSubst odo = adding_machine(3);
    BoolClassification c = bool_classify(odo);
    std::cout << "adding machine, n=3: invertible " << (c.invertible ? "yes" : "no") << ", order "
              << (c.permutation_order ? c.permutation_order->str() : std::string("-"))
              << ", generic " << (c.generic ? "yes" : "no") << "\n";
    return 0;
}
