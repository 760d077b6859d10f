// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Bounds are fixed here; they are the documented desk-scale ranges.

#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "astenum/verify.hpp"

using namespace astenum;

namespace {

struct Criterion {
    std::string label;
    verify::Suite suite;
};

std::vector<Criterion> build_criteria() {
    std::vector<Criterion> criteria;

    {
        Criterion c{"1 trapezoid/partition generating functions agree (n<=4, l<=5, all d)", {}};
        verify::add_joint_distribution(c.suite, 4, 5);
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{"2 known small polynomials reproduced bit-exactly", {}};
        verify::add_known_genfuncs(c.suite);
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{"3 determinant and path routes agree with enumeration (n<=4, l<=5)", {}};
        verify::add_determinant_route(c.suite, 4, 5);
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{"4 all-ones specialization equals the counting determinant (n<=6, l<=5)", {}};
        verify::add_counting_route(c.suite, 6, 5);
        c.suite.add("count-route", "value(2,4)", [] {
            return verify::equal_ints(8, andrews_count(2, 4));
        });
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{"5 2-enumeration product formula (rows<=6 vs Q=2; rows<=4 vs brute force)", {}};
        verify::add_two_enumeration(c.suite, 6, 4, 5);
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{"6 quasi trapezoid 2- and 3-enumeration sequences (n<=5)", {}};
        verify::add_quasi_sequences(c.suite, 5);
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{"7 bijection suites: trees (n<=3, 2<=l<=5), paths (n<=4, k<=4)", {}};
        verify::add_tree_bijection(c.suite, 3, 2, 5);
        verify::add_path_bijection(c.suite, 4, 4);
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{"8 per-path closed form equals enumeration (i,j<=5, l<=5, all d)", {}};
        verify::add_path_oracle(c.suite, 5, 5, 5);
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{"9 f/g identity (i,j<=8, 2<=l<=8) and determinant ratios (n<=3, a<=4)", {}};
        verify::add_fg_identity(c.suite, 8, 8);
        verify::add_andrews_ratios(c.suite, 3, 4);
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{"10 constant-term formula equals triangle recursion (entries<=4, n<=3)", {}};
        verify::add_operator_oracle(c.suite, 4, 3);
        criteria.push_back(std::move(c));
    }
    return criteria;
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    for (int a = 1; a < argc; ++a) {
        if (std::string(argv[a]) == "--jobs" && a + 1 < argc) jobs = std::stoi(argv[a + 1]);
    }

    bool all_ok = true;
    for (auto& criterion : build_criteria()) {
        const auto start = std::chrono::steady_clock::now();
        auto results = criterion.suite.run(jobs);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        const bool ok = verify::all_passed(results);
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion.label << "  ["
                  << results.size() << " checks, " << static_cast<long long>(ms) << " ms]\n";
        if (!ok)
            for (const auto& r : results)
                if (!r.pass)
                    std::cout << "      " << r.name << "(" << r.params
                              << ") expected: " << r.expected << " actual: " << r.actual << "\n";
    }
    std::cout << (all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES above")
              << "\n";
    return all_ok ? 0 : 1;
}
