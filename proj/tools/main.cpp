// qutrit-msd: screen qutrit stabilizer codes as strange-state distillation
// routines. Subcommands: wenum, macwilliams, css, shorten, distill, search,
// oracle.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qmsd/dense_oracle.hpp"
#include "qmsd/distill.hpp"
#include "qmsd/enumerators.hpp"
#include "qmsd/pipeline.hpp"

namespace {

using namespace qmsd;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text) || !out.flush())
        throw Error("cannot write '" + out_path + "'");
}

std::string first_line(const std::string& text) {
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        bool blank = true;
        for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
        if (!blank) return line;
    }
    return "";
}

struct LoadedCode {
    std::optional<ClassicalTernaryCode> classical;
    std::optional<StabilizerCode> stabilizer;
};

LoadedCode load_code(const std::string& path) {
    std::string text = slurp(path);
    std::string head = first_line(text);
    LoadedCode lc;
    if (head == "TERNARY-CODE v1") {
        lc.classical = parse_classical(text);
    } else if (head == "STABILIZER-CODE v1") {
        StabilizerCode s = parse_stabilizer(text);
        validate(s);
        lc.stabilizer = std::move(s);
    } else {
        throw Error("'" + path + "': expected a TERNARY-CODE v1 or STABILIZER-CODE v1 file");
    }
    return lc;
}

int cmd_wenum(const std::string& file, const std::string& method, bool complete,
              const std::string& out, std::uint64_t mem_cap) {
    LoadedCode lc = load_code(file);
    if (complete) {
        StabilizerCode code = lc.stabilizer ? *lc.stabilizer
                                            : css_from_classical(*lc.classical);
        CompleteEnumerator c = complete_wenum(code);
        emit(format_complete(c, code.r), out);
        return 0;
    }
    WeightEnumerator a;
    if (lc.classical) {
        if (method == "naive")
            a = simple_wenum_naive(css_from_classical(*lc.classical));
        else
            a = simple_wenum_css_fast(*lc.classical, mem_cap);
    } else {
        if (method == "fast")
            throw Error("--method fast needs a classical (TERNARY-CODE) input");
        a = simple_wenum_naive(*lc.stabilizer);
    }
    emit(format_wenum(a), out);
    return 0;
}

int cmd_macwilliams(const std::string& file, const std::string& out) {
    WeightEnumerator a = parse_wenum(slurp(file));
    WeightEnumerator b;
    if (a.kind == WeightEnumerator::Kind::A) {
        b = macwilliams(a, a.n, a.k);
    } else if (a.kind == WeightEnumerator::Kind::B) {
        b = macwilliams(a, a.n, -a.k);  // inverse direction
        b.k = a.k;
        b.kind = WeightEnumerator::Kind::A;
    } else {
        throw Error("macwilliams expects an enumerator of kind A or B");
    }
    emit(format_wenum(b), out);
    return 0;
}

int cmd_css(const std::string& file, const std::string& out) {
    ClassicalTernaryCode c = parse_classical(slurp(file));
    StabilizerCode s = css_from_classical(c);
    validate(s);
    emit(format_stabilizer(s), out);
    return 0;
}

int cmd_shorten(const std::string& file, std::optional<std::size_t> coord,
                bool all_rotations, const std::string& out_dir) {
    StabilizerCode state = parse_stabilizer(slurp(file));
    validate(state);
    if (!coord && !all_rotations)
        throw Error("shorten: pass --coord <i> and/or --all-rotations");
    std::vector<std::size_t> coords;
    if (coord) coords.push_back(*coord);
    else
        for (std::size_t i = 1; i <= state.n; ++i) coords.push_back(i);
    const auto& rotations = sl23_rotations();
    std::size_t produced = 0, degenerate = 0;
    for (std::size_t c0 : coords) {
        std::size_t rot_count = all_rotations ? rotations.size() : 1;
        for (std::size_t ri = 0; ri < rot_count; ++ri) {
            Rotation rot = all_rotations ? rotations[ri] : identity_rotation();
            StabilizerCode result;
            try {
                result = shorten(state, c0, rot);
            } catch (const Error& e) {
                std::cerr << "# coord=" << c0 << " rotation=" << ri << ": "
                          << e.what() << "\n";
                ++degenerate;
                continue;
            }
            if (all_rotations) result.id += "-r" + std::to_string(ri);
            ++produced;
            if (out_dir.empty()) {
                std::cout << "# coord=" << c0 << " rotation=" << ri << "\n"
                          << format_stabilizer(result);
            } else {
                std::filesystem::create_directories(out_dir);
                emit(format_stabilizer(result),
                     (std::filesystem::path(out_dir) / (result.id + ".sc")).string());
            }
        }
    }
    std::cerr << "# shorten: " << produced << " codes, " << degenerate
              << " degenerate attempts\n";
    return produced > 0 ? 0 : 1;
}

int cmd_distill(const std::string& file, const std::string& enum_file, bool json,
                bool require_distill, std::uint64_t mem_cap) {
    if (file.empty() == enum_file.empty())
        throw Error("distill: pass exactly one of <code-file> or --enumerator");
    WeightEnumerator a;
    std::string id;
    std::optional<std::size_t> distance;
    if (!enum_file.empty()) {
        a = parse_wenum(slurp(enum_file));
        if (a.kind != WeightEnumerator::Kind::A)
            throw Error("distill --enumerator expects kind A");
        id = std::filesystem::path(enum_file).stem().string();
    } else {
        LoadedCode lc = load_code(file);
        if (lc.classical) {
            a = simple_wenum_css_fast(*lc.classical, mem_cap);
            id = lc.classical->id;
        } else {
            a = simple_wenum_naive(*lc.stabilizer);
            id = lc.stabilizer->id;
        }
    }
    WeightEnumerator b = macwilliams(a, a.n, a.k);
    distance = distance_from_enums(a, b);
    DistillationProfile p = screen_enumerators(a, b, a.n, a.k);
    if (json) {
        std::cout << profile_to_json(p, id, a.n, a.k);
    } else {
        std::cout << "id: " << id << "\n";
        std::cout << "n: " << a.n << "  k: " << a.k << "  distance: "
                  << (distance ? std::to_string(*distance) : std::string("-")) << "\n";
        std::cout << "B(-1/2): " << rat_num(p.b_at_minus_half) << "/"
                  << rat_den(p.b_at_minus_half) << "\n";
        std::cout << "conditions: b_nonzero=" << (p.conditions.b_nonzero ? "yes" : "no")
                  << " sum_zero=" << (p.conditions.sum_zero ? "yes" : "no")
                  << " deriv1_zero=" << (p.conditions.deriv1_zero ? "yes" : "no")
                  << " deriv2_zero=" << (p.conditions.deriv2_zero ? "yes" : "no") << "\n";
        std::cout << "delta: " << (p.delta ? std::to_string(*p.delta) : std::string("-"))
                  << "  leading: " << rat_num(p.leading) << "/" << rat_den(p.leading)
                  << "\n";
        std::cout << "distills: " << (p.distills ? "yes" : "no")
                  << "  classification: " << p.classification << "\n";
        std::cout << "threshold: " << format_threshold(p.threshold_value) << "\n";
        std::cout << "success_at_zero: " << rat_num(p.success_at_zero) << "/"
                  << rat_den(p.success_at_zero) << "\n";
    }
    if (require_distill && !p.distills) return 2;
    return 0;
}

int cmd_search(const std::string& dir, const std::string& report_path,
               const std::string& format, int jobs, std::uint64_t mem_cap) {
    SearchOptions opt;
    opt.jobs = jobs;
    opt.mem_cap = mem_cap;
    SearchReport report = run_search(dir, opt);
    std::ostringstream body;
    if (format == "json")
        write_report_json(report, body);
    else
        write_report_csv(report, body);
    emit(body.str(), report_path);
    if (!report_path.empty()) {
        std::cout << "screened " << report.records.size() << " codes, "
                  << report.distinct_enumerators << " distinct enumerators\n";
        for (const auto& [cls, count] : report.summary)
            std::cout << "  " << cls << ": " << count << "\n";
        if (report.spearman)
            std::cout << "  spearman(success, threshold): " << *report.spearman << "\n";
    }
    return 0;
}

int cmd_oracle(const std::string& range, int trials, std::uint64_t seed, double tol) {
    int n_min = 0, n_max = 0;
    auto dots = range.find("..");
    try {
        if (dots == std::string::npos) {
            n_min = n_max = std::stoi(range);
        } else {
            n_min = std::stoi(range.substr(0, dots));
            n_max = std::stoi(range.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw Error("oracle: bad --n range '" + range + "' (want e.g. 2..4)");
    }
    OracleReport report = run_oracle_trials(n_min, n_max, trials, seed, tol);
    std::cout << "trials: " << report.trials << "\n";
    std::cout << "max_residual: " << report.max_residual << "\n";
    std::cout << "failures: " << report.failures << "\n";
    return report.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qutrit magic state distillation screening"};
    app.require_subcommand(1);

    std::string file, out, out_dir, enum_file, report_path;
    std::string method = "fast", format = "csv", range = "2..4";
    bool complete = false, all_rotations = false, json = false, require_distill = false;
    std::optional<std::size_t> coord;
    std::uint64_t mem_cap = kDefaultMemCap, seed = 20260823;
    int jobs = 1, trials = 50;
    double tol = 1e-9;

    auto* wenum = app.add_subcommand("wenum", "weight enumerator of a code file");
    wenum->add_option("code-file", file)->required();
    wenum->add_option("--method", method)->check(CLI::IsMember({"naive", "fast"}));
    wenum->add_flag("--complete", complete, "emit the complete enumerator");
    wenum->add_option("--out", out);
    wenum->add_option("--mem-cap", mem_cap, "fast-path memory cap in bytes");

    auto* macw = app.add_subcommand("macwilliams", "MacWilliams transform of a WENUM file");
    macw->add_option("wenum-file", file)->required();
    macw->add_option("--out", out);

    auto* css = app.add_subcommand("css", "CSS stabilizer code from a self-orthogonal ternary code");
    css->add_option("ternary-code-file", file)->required();
    css->add_option("--out", out);

    auto* shorten = app.add_subcommand("shorten", "shorten an [[n,0]] state to [[n-1,1]] codes");
    shorten->add_option("stabilizer-file", file)->required();
    shorten->add_option("--coord", coord, "1-based coordinate (default: all)");
    shorten->add_flag("--all-rotations", all_rotations, "try all 24 single-site rotations");
    shorten->add_option("--out-dir", out_dir);

    auto* distill = app.add_subcommand("distill", "screen one code or enumerator");
    distill->add_option("code-file", file);
    distill->add_option("--enumerator", enum_file, "WENUM v1 file with a kind A enumerator");
    distill->add_flag("--json", json);
    distill->add_flag("--require-distill", require_distill,
                      "exit 2 when the code does not distill");
    distill->add_option("--mem-cap", mem_cap);

    auto* search = app.add_subcommand("search", "screen every code under a directory");
    search->add_option("dir", file)->required();
    search->add_option("--report", report_path, "write the report here instead of stdout");
    search->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    search->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    search->add_option("--mem-cap", mem_cap);

    auto* oracle = app.add_subcommand("oracle", "randomized dense-matrix identity checks");
    oracle->add_option("--n", range, "qutrit count or range, e.g. 3 or 2..4");
    oracle->add_option("--trials", trials)->check(CLI::PositiveNumber);
    oracle->add_option("--seed", seed);
    oracle->add_option("--tol", tol);

    try {
        app.parse(argc, argv);
        if (wenum->parsed()) return cmd_wenum(file, method, complete, out, mem_cap);
        if (macw->parsed()) return cmd_macwilliams(file, out);
        if (css->parsed()) return cmd_css(file, out);
        if (shorten->parsed()) return cmd_shorten(file, coord, all_rotations, out_dir);
        if (distill->parsed())
            return cmd_distill(file, enum_file, json, require_distill, mem_cap);
        if (search->parsed()) return cmd_search(file, report_path, format, jobs, mem_cap);
        if (oracle->parsed()) return cmd_oracle(range, trials, seed, tol);
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const qmsd::ResourceLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qmsd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
