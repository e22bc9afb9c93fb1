#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "wellpath/bijections.hpp"
#include "wellpath/counting.hpp"
#include "wellpath/json_io.hpp"
#include "wellpath/polytope.hpp"

namespace {

using namespace wellpath;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("WELLPATH_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

int run_count(const std::string& family, long n, long k, bool have_k) {
    BigCount result;
    if (family == "motzkin") {
        result = have_k ? count_motzkin_refined(n, k) : count_motzkin(n);
    } else if (family == "positive") {
        result = have_k ? count_positive_refined(n, k) : count_positive(n);
    } else if (family == "positive-updown") {
        result = count_positive_updown(n);
    } else if (family == "dyck-updown") {
        result = count_dyck_updown(n);
    } else {
        std::cerr << "unknown family: " << family << "\n";
        return 2;
    }
    std::cout << result << "\n";
    return 0;
}

int run_enumerate(const std::string& family, int n) {
    if (family == "motzkin") {
        for_each_motzkin(n, [](const WellLabelledPath& p) {
            std::cout << path_to_json(p).dump() << "\n";
        });
    } else if (family == "positive") {
        for_each_positive(n, [](const WellLabelledPath& p) {
            std::cout << path_to_json(p).dump() << "\n";
        });
    } else if (family == "trees") {
        for (const auto& t : enumerate_trees(n))
            std::cout << tree_to_json(t).dump() << "\n";
    } else if (family == "marked-trees") {
        for (const auto& mt : enumerate_marked_trees(n))
            std::cout << marked_tree_to_json(mt).dump() << "\n";
    } else if (family == "matchings") {
        for (const auto& m : enumerate_matchings(n))
            std::cout << matching_to_json(m).dump() << "\n";
    } else {
        std::cerr << "unknown family: " << family << "\n";
        return 2;
    }
    return 0;
}

int run_map(const std::string& from, const std::string& to, bool marked) {
    for (const std::string& fam : {from, to}) {
        if (fam != "path" && fam != "tree" && fam != "matching") {
            std::cerr << "unknown object kind: " << fam << "\n";
            return 2;
        }
    }
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        const Json in = Json::parse(line);
        Json out;
        if (marked) {
            // positive-path route: phi' / psi'
            MarkedLabelledBinaryTree mt{LabelledBinaryTree::leaf(1), {}};
            if (from == "path") mt = phi_prime(path_from_json(in));
            else if (from == "tree") mt = marked_tree_from_json(in);
            else mt = psi_prime_inv(matching_from_json(in));
            if (to == "path") out = path_to_json(phi_prime_inv(mt));
            else if (to == "tree") out = marked_tree_to_json(mt);
            else out = matching_to_json(psi_prime(mt));
        } else {
            // Motzkin route: phi / psi
            LabelledBinaryTree t = LabelledBinaryTree::leaf(1);
            if (from == "path") t = phi(path_from_json(in));
            else if (from == "tree") t = tree_from_json(in);
            else t = psi_inv(matching_from_json(in));
            if (to == "path") out = path_to_json(phi_inv(t));
            else if (to == "tree") out = tree_to_json(t);
            else out = matching_to_json(psi(t));
        }
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int run_sample(const std::string& family, int n, long count, std::uint64_t seed) {
    if (family != "positive") {
        std::cerr << "sampling supports only --family positive\n";
        return 2;
    }
    std::mt19937_64 rng(seed);
    for (long c = 0; c < count; ++c) {
        const Matching m = random_matching(n, rng);
        const WellLabelledPath p = phi_prime_inv(psi_prime_inv(m));
        std::cout << path_to_json(p).dump() << "\n";
    }
    return 0;
}

bool report(const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    return ok;
}

bool verify_cardinality(int max_n) {
    bool ok = true;
    for (int n = 2; n <= max_n; ++n) {
        long long c = 0;
        for_each_motzkin(n, [&](const WellLabelledPath&) { ++c; });
        ok &= report("cardinality motzkin n=" + std::to_string(n),
                     BigCount(c) == count_motzkin(n));
    }
    for (int n = 1; n <= max_n; ++n) {
        long long c = 0;
        for_each_positive(n, [&](const WellLabelledPath&) { ++c; });
        ok &= report("cardinality positive n=" + std::to_string(n),
                     BigCount(c) == count_positive(n));
    }
    return ok;
}

bool verify_roundtrip(int max_n) {
    bool ok = true;
    for (int n = 2; n <= max_n; ++n) {
        const auto paths = enumerate_motzkin(n);
        std::map<std::string, int> seen;
        bool trips = true;
        for (const auto& p : paths) {
            const auto t = phi(p);
            ++seen[t.encode()];
            trips &= phi_inv(t) == p;
            const auto m = psi(t);
            trips &= psi_inv(m) == t;
        }
        const bool full = static_cast<int>(seen.size()) == static_cast<int>(paths.size()) &&
                          seen.size() == enumerate_trees(n).size();
        ok &= report("roundtrip phi/psi motzkin n=" + std::to_string(n), trips && full);
    }
    for (int n = 1; n <= max_n; ++n) {
        const auto paths = enumerate_positive(n);
        std::map<std::string, int> seen;
        bool trips = true;
        for (const auto& p : paths) {
            const auto mt = phi_prime(p);
            ++seen[mt.encode()];
            trips &= phi_prime_inv(mt) == p;
            const auto m = psi_prime(mt);
            trips &= psi_prime_inv(m) == mt;
        }
        const bool full = static_cast<int>(seen.size()) == static_cast<int>(paths.size()) &&
                          seen.size() == enumerate_marked_trees(n).size();
        ok &= report("roundtrip phi'/psi' positive n=" + std::to_string(n), trips && full);
    }
    return ok;
}

bool verify_statistics(int max_n) {
    bool ok = true;
    for (int n = 2; n <= max_n; ++n) {
        bool match = true;
        for_each_motzkin(n, [&](const WellLabelledPath& p) {
            const int h = horizontal_step_count(p);
            const auto t = phi(p);
            match &= single_leaf_count(t) == h;
            match &= block_pair_count(psi(t), n, n + 1, 2 * n - 2) == h;
        });
        ok &= report("statistics motzkin n=" + std::to_string(n), match);
    }
    for (int n = 1; n <= max_n; ++n) {
        bool match = true;
        for_each_positive(n, [&](const WellLabelledPath& p) {
            const int h = horizontal_step_count(p);
            const auto mt = phi_prime(p);
            match &= quasi_single_leaf_count(mt) == h;
            match &= block_pair_count(psi_prime(mt), n, n + 1, 2 * n - 1) == h;
        });
        ok &= report("statistics positive n=" + std::to_string(n), match);
    }
    return ok;
}

bool verify_updown(int max_n) {
    bool ok = true;
    for (int n = 1; n <= max_n; ++n) {
        long long pos = 0, dyck = 0;
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
        do {
            if (is_positive_updown(perm)) ++pos;
            if (is_dyck_updown(perm)) ++dyck;
        } while (std::next_permutation(perm.begin(), perm.end()));
        ok &= report("updown positive n=" + std::to_string(n),
                     BigCount(pos) == count_positive_updown(n));
        if (n >= 2)
            ok &= report("updown dyck n=" + std::to_string(n),
                         BigCount(dyck) == count_dyck_updown(n));
    }
    return ok;
}

bool verify_eq3(int max_n) {
    bool ok = true;
    for (int n = 1; n <= max_n; ++n) {
        std::map<std::string, int> image;
        for_each_positive(n, [&](const WellLabelledPath& p) {
            for (int k = 1; k <= n + 1; ++k)
                for (int b = 0; b <= 1; ++b)
                    ++image[path_to_json(add_step(StepAddInput{p, k, b})).dump()];
        });
        std::map<std::string, int> target;
        for_each_positive(n + 1, [&](const WellLabelledPath& p) {
            ++target[path_to_json(p).dump()];
        });
        for_each_motzkin(n + 1, [&](const WellLabelledPath& p) {
            ++target[path_to_json(p).dump()];
        });
        ok &= report("step-adding bijection n=" + std::to_string(n), image == target);
    }
    return ok;
}

int run_verify(const std::string& suite, int max_n) {
    bool ok;
    if (suite == "roundtrip") ok = verify_roundtrip(max_n);
    else if (suite == "cardinality") ok = verify_cardinality(max_n);
    else if (suite == "statistics") ok = verify_statistics(max_n);
    else if (suite == "updown") ok = verify_updown(max_n);
    else if (suite == "eq3") ok = verify_eq3(max_n);
    else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    return ok ? 0 : 1;
}

int run_volume(int n, long long samples, std::uint64_t seed) {
    const VolumeEstimate est = mc_estimate(n, samples, seed);
    std::cout << "n=" << est.n << " samples=" << est.samples
              << " estimate=" << est.estimate << " std_error=" << est.std_error
              << " exact=" << est.exact << " ("
              << static_cast<double>(est.exact) << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"well-labelled paths, labelled binary trees and matchings"};
    app.require_subcommand(1);

    std::string family, from, to, suite;
    long n = 0, k = 0, count = 1;
    long long samples = 1000000;
    int max_n = 6;
    bool marked = false;
    std::uint64_t seed = default_seed();

    auto* c_count = app.add_subcommand("count", "print an exact count");
    c_count->add_option("--family", family)->required();
    c_count->add_option("--n", n)->required();
    auto* kopt = c_count->add_option("--k", k);

    auto* c_enum = app.add_subcommand("enumerate", "print one JSON object per line");
    c_enum->add_option("--family", family)->required();
    c_enum->add_option("--n", n)->required();

    auto* c_map = app.add_subcommand("map", "apply a bijection to JSON lines on stdin");
    c_map->add_option("--from", from)->required();
    c_map->add_option("--to", to)->required();
    c_map->add_flag("--marked", marked, "use the positive-path (marked) route");

    auto* c_sample = app.add_subcommand("sample", "uniform random objects");
    c_sample->add_option("--family", family)->required();
    c_sample->add_option("--n", n)->required();
    c_sample->add_option("--count", count);
    c_sample->add_option("--seed", seed);

    auto* c_verify = app.add_subcommand("verify", "exhaustive checks");
    c_verify->add_option("--suite", suite)->required();
    c_verify->add_option("--max-n", max_n);

    auto* c_volume = app.add_subcommand("volume", "Monte Carlo volume of Pi_n");
    c_volume->add_option("--n", n)->required();
    c_volume->add_option("--samples", samples);
    c_volume->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (c_count->parsed()) return run_count(family, n, k, kopt->count() > 0);
        if (c_enum->parsed()) return run_enumerate(family, static_cast<int>(n));
        if (c_map->parsed()) return run_map(from, to, marked);
        if (c_sample->parsed())
            return run_sample(family, static_cast<int>(n), count, seed);
        if (c_verify->parsed()) return run_verify(suite, max_n);
        if (c_volume->parsed()) return run_volume(static_cast<int>(n), samples, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
