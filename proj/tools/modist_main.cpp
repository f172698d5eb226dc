// modist: construct, analyze, and verify tight modular distance sets in
// real quadratic fields. All arithmetic is exact; all output is
// deterministic. Exit codes: 0 success/verified, 1 negative verdict,
// 2 usage or input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "modist/constructions.hpp"
#include "modist/json_io.hpp"
#include "modist/parallel.hpp"

namespace {

using namespace modist;

struct Options {
    std::string input, output, seed_file;
    std::string family, format = "tsv";
    long d = 0, k = 0, dmax = 0, pmax = 13, place = 0;
    long root = -1;
    std::string sign = "plus";
    int jobs = 1;
    unsigned long seed = 1;
    bool have_root = false;
};

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw std::invalid_argument("cannot open '" + output_path + "' for writing");
    out << text;
}

PrimePlace select_place(const QuadField& field, long p, bool have_root, long root) {
    auto places = PrimePlace::primes_above(field, p);
    if (!have_root) return places.front();
    for (const PrimePlace& place : places)
        if (place.c() && *place.c() == root) return place;
    std::string have;
    for (const PrimePlace& place : places) have += (have.empty() ? "" : ", ") + place.str();
    throw std::invalid_argument("no place above " + std::to_string(p) + " with root " +
                                std::to_string(root) + " in " + field.str() + "; places: " + have);
}

int run_construct(const Options& opt) {
    PointSet x = [&] {
        if (opt.family == "simplex") return regular_simplex(opt.d);
        if (opt.family == "simplex-center") return simplex_with_center(opt.d);
        if (opt.family == "eq31") return example_regular_plus_two(opt.d);
        RootSign sign = opt.sign == "minus" ? RootSign::Minus : RootSign::Plus;
        return t_family(TFamilySpec::make(opt.d, opt.k, sign));
    }();
    emit(dump_json(pointset_to_json(x)), opt.output);
    return 0;
}

int run_analyze(const Options& opt) {
    PointSet x = read_pointset(opt.input);
    std::vector<QElem> dist = distance_set(x);
    long n = static_cast<long>(x.n());
    long d = embedding_dimension(x);
    auto rows = mod_profile_sweep(x, opt.pmax, opt.jobs);

    std::string text;
    if (opt.format == "json") {
        Json j{{"n", n}, {"d", d}, {"distances", Json::array()}, {"places", Json::array()}};
        for (const QElem& a : dist) j["distances"].push_back(qelem_to_json(a));
        for (const SweepRow& row : rows) j["places"].push_back(sweep_row_to_json(row));
        text = dump_json(j);
    } else {
        text = "# n=" + std::to_string(n) + " d=" + std::to_string(d) +
               " distances=" + std::to_string(dist.size()) + " r=" +
               std::to_string(x.field().r()) + "\n";
        text += std::string(kSweepTsvHeader) + "\n";
        for (const SweepRow& row : rows) text += sweep_row_tsv(row) + "\n";
    }
    emit(text, opt.output);
    return 0;
}

int run_verify(const Options& opt) {
    PointSet x = read_pointset(opt.input);
    PrimePlace place = select_place(x.field(), opt.place, opt.have_root, opt.root);
    TightVerdict verdict = verify_tight_one_distance(x, place);
    Json j = verdict_to_json(verdict, place);
    if (verdict.is_tight) j["obstruction"] = obstruction_to_json(obstruction_determinant(x, place));
    emit(dump_json(j), opt.output);
    return verdict.is_tight ? 0 : 1;
}

int run_classify(const Options& opt) {
    std::vector<std::pair<long, long>> cells;
    for (long d = 2; d <= opt.dmax; ++d)
        for (long k = 2; k <= d; ++k) {
            auto [field, q] = QuadField::adjoin_sqrt(Int(k) * (d + 1) * (d + 2 - k));
            if (!field.is_rational_field()) cells.emplace_back(d, k);
        }
    std::vector<TFamilyVerdict> verdicts(cells.size());
    parallel_for(cells.size(), opt.jobs,
                 [&](size_t i) { verdicts[i] = classify_t_family(cells[i].first, cells[i].second); });

    bool all_agree = true;
    std::string text;
    if (opt.format == "json") {
        Json j = Json::array();
        for (const TFamilyVerdict& v : verdicts) {
            j.push_back(tfamily_verdict_to_json(v));
            all_agree &= v.agree;
        }
        text = dump_json(j);
    } else {
        text = std::string(kClassifyTsvHeader) + "\n";
        for (const TFamilyVerdict& v : verdicts) {
            text += tfamily_verdict_tsv(v) + "\n";
            all_agree &= v.agree;
        }
    }
    emit(text, opt.output);
    return all_agree ? 0 : 1;
}

int run_sweep(const Options& opt) {
    std::string text;
    bool all_pass = true;
    if (opt.family == "eq31") {
        // Tightness of the d+2 point construction at every place above every
        // odd prime dividing d+2.
        text = "d\tp\tc\ttight\n";
        struct Cell {
            long d, p;
        };
        std::vector<Cell> cells;
        for (long d = 2; d <= opt.dmax; ++d)
            for (long p : primes_up_to(d + 2))
                if (p != 2 && (d + 2) % p == 0) cells.push_back({d, p});
        std::vector<std::string> chunks(cells.size());
        std::vector<char> ok(cells.size(), 1);
        parallel_for(cells.size(), opt.jobs, [&](size_t i) {
            PointSet x = example_regular_plus_two(cells[i].d);
            std::string chunk;
            for (const PrimePlace& place : PrimePlace::primes_above(x.field(), cells[i].p)) {
                TightVerdict v = verify_tight_one_distance(x, place);
                chunk += std::to_string(cells[i].d) + "\t" + std::to_string(cells[i].p) + "\t" +
                         (place.c() ? std::to_string(*place.c()) : "-") + "\t" +
                         (v.is_tight ? "true" : "false") + "\n";
                if (!v.is_tight) ok[i] = 0;
            }
            chunks[i] = std::move(chunk);
        });
        for (size_t i = 0; i < cells.size(); ++i) {
            text += chunks[i];
            all_pass &= ok[i] != 0;
        }
    } else {  // simplex-center
        // Tightness at p = 2 for even d: holds exactly when d = 2 (mod 4).
        text = "d\tpredicted\tsMod\ttight\tagree\n";
        std::vector<long> ds;
        for (long d = 2; d <= opt.dmax; d += 2) ds.push_back(d);
        std::vector<std::string> chunks(ds.size());
        std::vector<char> ok(ds.size(), 1);
        parallel_for(ds.size(), opt.jobs, [&](size_t i) {
            long d = ds[i];
            bool predicted = predict_tight_existence(d, 2, ExistenceVariant::General);
            PointSet x = simplex_with_center(d);
            PrimePlace place = PrimePlace::primes_above(QuadField::rationals(), 2)[0];
            TightVerdict v = verify_tight_one_distance(x, place);
            bool agree = v.is_tight == predicted;
            chunks[i] = std::to_string(d) + "\t" + (predicted ? "true" : "false") + "\t" +
                        std::to_string(v.s_mod) + "\t" + (v.is_tight ? "true" : "false") + "\t" +
                        (agree ? "true" : "false") + "\n";
            ok[i] = agree ? 1 : 0;
        });
        for (size_t i = 0; i < ds.size(); ++i) {
            text += chunks[i];
            all_pass &= ok[i] != 0;
        }
    }
    emit(text, opt.output);
    return all_pass ? 0 : 1;
}

std::vector<std::vector<Int>> load_seed_file(const std::string& path, size_t n, size_t coords) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open seed file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("'" + path + "': " + e.what());
    }
    if (!j.is_array() || j.size() != n)
        throw std::invalid_argument("seed file must hold one integer vector per point (" +
                                    std::to_string(n) + " expected)");
    std::vector<std::vector<Int>> seeds;
    for (const Json& row : j) {
        if (!row.is_array() || row.size() != coords)
            throw std::invalid_argument("seed vectors must have " + std::to_string(coords) +
                                        " coordinates");
        std::vector<Int> r;
        for (const Json& v : row) {
            if (!v.is_number_integer()) throw std::invalid_argument("seed entries must be integers");
            r.emplace_back(v.get<long>());
        }
        seeds.push_back(std::move(r));
    }
    return seeds;
}

int run_perturb(const Options& opt) {
    PointSet x = read_pointset(opt.input);
    PrimePlace place = select_place(x.field(), opt.place, opt.have_root, opt.root);
    const size_t coords = x.point(0).size();

    std::vector<std::vector<Int>> seeds;
    if (!opt.seed_file.empty()) {
        seeds = load_seed_file(opt.seed_file, x.n(), coords);
    } else {
        std::mt19937_64 gen(opt.seed);
        std::uniform_int_distribution<long> dist(-2, 2);
        const bool hyper = x.ambient().model == AmbientModel::Hyperplane;
        seeds.assign(x.n(), std::vector<Int>(coords, 0));
        for (auto& row : seeds) {
            Int sum = 0;
            for (size_t j = 0; j + (hyper ? 1 : 0) < coords; ++j) {
                row[j] = dist(gen);
                sum += row[j];
            }
            if (hyper) row.back() = -sum;  // stay tangent to the hyperplane
        }
    }
    emit(dump_json(pointset_to_json(perturb(x, place, seeds))), opt.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modist: tight distance sets modulo prime ideals of real quadratic fields"};
    app.require_subcommand(1);
    Options opt;

    auto* construct = app.add_subcommand("construct", "emit a point-set family as JSON");
    construct->require_subcommand(1);
    for (const char* name : {"simplex", "simplex-center", "eq31", "tfamily"}) {
        auto* sub = construct->add_subcommand(name);
        sub->add_option("--d", opt.d, "dimension")->required();
        if (std::string(name) == "tfamily") {
            sub->add_option("--k", opt.k, "number of coordinates at the base value c")->required();
            sub->add_option("--sign", opt.sign, "root branch")->check(CLI::IsMember({"plus", "minus"}));
        }
        sub->add_option("--output,-o", opt.output, "output file (default stdout)");
        sub->callback([&opt, name] { opt.family = name; });
    }

    auto* analyze = app.add_subcommand("analyze", "per-place residue profile of a point set");
    analyze->add_option("--input,-i", opt.input, "point-set JSON")->required();
    analyze->add_option("--pmax", opt.pmax, "largest prime to profile (default 13)");
    analyze->add_option("--format", opt.format)->check(CLI::IsMember({"tsv", "json"}));
    analyze->add_option("--jobs", opt.jobs, "worker threads");
    analyze->add_option("--output,-o", opt.output);

    auto* verify = app.add_subcommand("verify", "tightness verdict at one place (exit 0 iff tight)");
    verify->add_option("--input,-i", opt.input)->required();
    verify->add_option("--place", opt.place, "rational prime p")->required();
    verify->add_option("--root", opt.root, "root c selecting a split place")
        ->each([&opt](const std::string&) { opt.have_root = true; });
    verify->add_option("--output,-o", opt.output);

    auto* classify = app.add_subcommand("classify", "T-family grid: closed form vs computed");
    classify->add_option("--dmax", opt.dmax, "largest dimension")->required();
    classify->add_option("--format", opt.format)->check(CLI::IsMember({"tsv", "json"}));
    classify->add_option("--jobs", opt.jobs);
    classify->add_option("--output,-o", opt.output);

    auto* sweep = app.add_subcommand("sweep", "family sweeps reproducing the existence theorems");
    sweep->require_subcommand(1);
    for (const char* name : {"eq31", "simplex-center"}) {
        auto* sub = sweep->add_subcommand(name);
        sub->add_option("--dmax", opt.dmax, "largest dimension")->required();
        sub->add_option("--jobs", opt.jobs);
        sub->add_option("--output,-o", opt.output);
        sub->callback([&opt, name] { opt.family = name; });
    }

    auto* perturb_cmd = app.add_subcommand("perturb", "valuation-bounded perturbation of a point set");
    perturb_cmd->add_option("--input,-i", opt.input)->required();
    perturb_cmd->add_option("--place", opt.place, "rational prime p")->required();
    perturb_cmd->add_option("--root", opt.root, "root c selecting a split place")
        ->each([&opt](const std::string&) { opt.have_root = true; });
    perturb_cmd->add_option("--seed", opt.seed, "RNG seed for random integer seeds (default 1)");
    perturb_cmd->add_option("--seed-file", opt.seed_file, "JSON array of integer seed vectors");
    perturb_cmd->add_option("--output,-o", opt.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed()) return run_construct(opt);
        if (analyze->parsed()) return run_analyze(opt);
        if (verify->parsed()) return run_verify(opt);
        if (classify->parsed()) return run_classify(opt);
        if (sweep->parsed()) return run_sweep(opt);
        if (perturb_cmd->parsed()) return run_perturb(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
