#include "qmsd/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "text_util.hpp"

namespace qmsd {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("ingest: unreadable path: " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_significant_line(const std::string& text) {
    for (const auto& line : detail::split_lines(text))
        if (!detail::is_comment_or_blank(line)) return line;
    return "";
}

// single_file: unrecognized content is an error rather than a silent skip
void ingest_file(const fs::path& f, IngestResult& out, bool single_file) {
    std::string text;
    try {
        text = read_file(f);
    } catch (const Error& e) {
        out.errors.push_back({f.string(), 0, e.what()});
        return;
    }
    std::string head = first_significant_line(text);
    try {
        if (head == "TERNARY-CODE v1") {
            ClassicalTernaryCode c = parse_classical(text);
            if (!is_self_orthogonal(c))
                throw Error("classical code '" + c.id + "': not-self-orthogonal");
            out.codes.push_back({std::move(c), f.string()});
        } else if (head == "STABILIZER-CODE v1") {
            StabilizerCode s = parse_stabilizer(text);
            validate(s);
            out.codes.push_back({std::move(s), f.string()});
        } else if (head == "WENUM v1" || head == "CWENUM v1") {
            // enumerator artifacts are not code inputs; only named files complain
            if (single_file)
                out.errors.push_back({f.string(), 0,
                                      "enumerator file is not a code input"});
        } else {
            std::vector<std::string> block_errors;
            auto blocks = convert_magma(text, f.stem().string(), &block_errors);
            for (const auto& msg : block_errors)
                out.errors.push_back({f.string(), 0, msg});
            std::size_t accepted = 0;
            for (auto& c : blocks) {
                if (!is_self_orthogonal(c)) {
                    out.errors.push_back({f.string(), 0,
                                          "classical code '" + c.id +
                                          "': not-self-orthogonal"});
                    continue;
                }
                out.codes.push_back({std::move(c), f.string()});
                ++accepted;
            }
            if (single_file && accepted == 0 && block_errors.empty())
                out.errors.push_back({f.string(), 0, "unrecognized format"});
        }
    } catch (const Error& e) {
        out.errors.push_back({f.string(), 0, e.what()});
    }
}

}  // namespace

IngestResult ingest(const std::string& path) {
    fs::path p(path);
    std::error_code ec;
    fs::file_status st = fs::status(p, ec);
    if (ec || !fs::exists(st)) throw Error("ingest: unreadable path: " + path);
    IngestResult result;
    if (fs::is_directory(st)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(p, ec))
            if (entry.is_regular_file()) files.push_back(entry.path());
        if (ec) throw Error("ingest: unreadable path: " + path);
        std::sort(files.begin(), files.end());
        for (const auto& f : files) ingest_file(f, result, false);
    } else {
        ingest_file(p, result, true);
    }
    if (result.codes.empty()) {
        std::string detail = "ingest: zero valid codes under " + path;
        for (const auto& e : result.errors)
            detail += "\n  " + e.source + ": " + e.message;
        throw Error(detail);
    }
    return result;
}

std::string enumerator_digest(const WeightEnumerator& a) {
    std::ostringstream canon;
    canon << "n=" << a.n << "\n";
    for (std::size_t d = 0; d < a.coeffs.size(); ++d)
        if (a.coeffs[d] != 0) canon << d << ' ' << a.coeffs[d] << "\n";
    return sha256_hex(canon.str());
}

ScreeningRecord screen(const IngestedCode& code, const ScreenOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    std::string id;
    try {
        WeightEnumerator a;
        if (std::holds_alternative<ClassicalTernaryCode>(code.code)) {
            const auto& c = std::get<ClassicalTernaryCode>(code.code);
            id = c.id;
            a = simple_wenum_css_fast(c, opt.mem_cap);
        } else {
            const auto& s = std::get<StabilizerCode>(code.code);
            id = s.id;
            a = simple_wenum_naive(s);
        }
        WeightEnumerator b = macwilliams(a, a.n, a.k);
        DistillationProfile profile = screen_enumerators(a, b, a.n, a.k);
        ScreeningRecord rec;
        rec.id = id;
        rec.n = a.n;
        rec.k = a.k;
        rec.distance = distance_from_enums(a, b);
        rec.b_at_minus_half = profile.b_at_minus_half;
        rec.distills = profile.distills;
        rec.classification = profile.classification;
        rec.delta = profile.delta;
        rec.leading = profile.leading;
        rec.threshold = profile.threshold_value;
        rec.success_at_zero = profile.success_at_zero;
        rec.enumerator_digest = enumerator_digest(a);
        rec.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
        return rec;
    } catch (const ResourceLimit& e) {
        throw ResourceLimit("screen '" + (id.empty() ? code.source : id) +
                            "': " + e.what());
    } catch (const Error& e) {
        throw Error("screen '" + (id.empty() ? code.source : id) + "': " + e.what());
    }
}

SearchReport dedupe(std::vector<ScreeningRecord> records) {
    std::sort(records.begin(), records.end(),
              [](const ScreeningRecord& a, const ScreeningRecord& b) {
                  if (a.n != b.n) return a.n < b.n;
                  if (a.threshold != b.threshold) return a.threshold > b.threshold;
                  return a.id < b.id;
              });
    SearchReport report;
    std::set<std::string> digests;
    for (const auto& r : records) {
        if (r.classification.rfind("order-", 0) == 0 && r.n % 2 == 1 && r.delta &&
            *r.delta < 3)
            throw Error("pipeline assertion failed: odd-n record '" + r.id +
                        "' classified order-" + std::to_string(*r.delta) +
                        " (expected delta >= 3)");
        digests.insert(r.enumerator_digest);
        ++report.summary[r.classification];
    }
    report.distinct_enumerators = digests.size();
    std::vector<std::pair<double, double>> xy;
    xy.reserve(records.size());
    for (const auto& r : records)
        xy.emplace_back(r.success_at_zero.convert_to<double>(), r.threshold);
    report.spearman = spearman_rank(xy);
    report.records = std::move(records);
    return report;
}

namespace {

std::string csv_optional(const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : "";
}

}  // namespace

void write_report_csv(const SearchReport& report, std::ostream& out) {
    out << "id,n,k,distance,b_num,b_den,distills,classification,delta,"
           "leading_num,leading_den,threshold,success_num,success_den,"
           "enumerator_digest,wall_time_ms\n";
    for (const auto& r : report.records) {
        out << r.id << ',' << r.n << ',' << r.k << ',' << csv_optional(r.distance)
            << ',' << rat_num(r.b_at_minus_half) << ',' << rat_den(r.b_at_minus_half)
            << ',' << (r.distills ? "true" : "false") << ',' << r.classification
            << ',' << csv_optional(r.delta) << ',' << rat_num(r.leading) << ','
            << rat_den(r.leading) << ',' << format_threshold(r.threshold) << ','
            << rat_num(r.success_at_zero) << ',' << rat_den(r.success_at_zero)
            << ',' << r.enumerator_digest << ',' << r.wall_time_ms << "\n";
    }
}

namespace {

nlohmann::ordered_json rational_json(const BigRat& q) {
    return {{"num", rat_num(q)}, {"den", rat_den(q)}};
}

BigRat rational_from_json(const nlohmann::json& j) {
    return BigRat(BigInt(j.at("num").get<std::string>()),
                  BigInt(j.at("den").get<std::string>()));
}

}  // namespace

void write_report_json(const SearchReport& report, std::ostream& out) {
    nlohmann::ordered_json j;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
        nlohmann::ordered_json rec;
        rec["id"] = r.id;
        rec["n"] = r.n;
        rec["k"] = r.k;
        if (r.distance) rec["distance"] = *r.distance;
        else rec["distance"] = nullptr;
        rec["b_at_minus_half"] = rational_json(r.b_at_minus_half);
        rec["distills"] = r.distills;
        rec["classification"] = r.classification;
        if (r.delta) rec["delta"] = *r.delta;
        else rec["delta"] = nullptr;
        rec["leading"] = rational_json(r.leading);
        rec["threshold"] = r.threshold;
        rec["success_at_zero"] = rational_json(r.success_at_zero);
        rec["enumerator_digest"] = r.enumerator_digest;
        rec["wall_time_ms"] = r.wall_time_ms;
        j["records"].push_back(std::move(rec));
    }
    j["summary"] = report.summary;
    j["distinct_enumerators"] = report.distinct_enumerators;
    if (report.spearman) j["spearman"] = *report.spearman;
    else j["spearman"] = nullptr;
    out << j.dump(2) << "\n";
}

SearchReport read_report_json(std::istream& in) {
    nlohmann::json j = nlohmann::json::parse(in);
    SearchReport report;
    for (const auto& rec : j.at("records")) {
        ScreeningRecord r;
        r.id = rec.at("id").get<std::string>();
        r.n = rec.at("n").get<std::size_t>();
        r.k = rec.at("k").get<int>();
        if (!rec.at("distance").is_null())
            r.distance = rec.at("distance").get<std::size_t>();
        r.b_at_minus_half = rational_from_json(rec.at("b_at_minus_half"));
        r.distills = rec.at("distills").get<bool>();
        r.classification = rec.at("classification").get<std::string>();
        if (!rec.at("delta").is_null()) r.delta = rec.at("delta").get<std::size_t>();
        r.leading = rational_from_json(rec.at("leading"));
        r.threshold = rec.at("threshold").get<double>();
        r.success_at_zero = rational_from_json(rec.at("success_at_zero"));
        r.enumerator_digest = rec.at("enumerator_digest").get<std::string>();
        r.wall_time_ms = rec.at("wall_time_ms").get<std::int64_t>();
        report.records.push_back(std::move(r));
    }
    for (const auto& [key, value] : j.at("summary").items())
        report.summary[key] = value.get<std::size_t>();
    report.distinct_enumerators = j.at("distinct_enumerators").get<std::size_t>();
    if (!j.at("spearman").is_null()) report.spearman = j.at("spearman").get<double>();
    return report;
}

SearchReport run_search(const std::string& path, const SearchOptions& opt) {
    IngestResult ingested = ingest(path);
    std::size_t count = ingested.codes.size();
    std::vector<ScreeningRecord> records(count);
    std::vector<std::string> failures(count);
    std::vector<char> failure_is_limit(count, 0);
    int jobs = std::max(1, opt.jobs);
    ScreenOptions sopt;
    sopt.mem_cap = opt.mem_cap;

    // the governor serializes jobs too big to run one-per-worker
    std::mutex big_job;
    std::uint64_t per_worker = opt.mem_cap / std::uint64_t(jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            const IngestedCode& code = ingested.codes[i];
            std::uint64_t estimate = 0;
            if (const auto* c = std::get_if<ClassicalTernaryCode>(&code.code))
                estimate = c->n < 63 ? std::uint64_t(8) << c->n : ~std::uint64_t(0);
            try {
                if (estimate > per_worker) {
                    std::lock_guard<std::mutex> lock(big_job);
                    records[i] = screen(code, sopt);
                } else {
                    records[i] = screen(code, sopt);
                }
            } catch (const ResourceLimit& e) {
                failures[i] = e.what();
                failure_is_limit[i] = 1;
            } catch (const Error& e) {
                failures[i] = e.what();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (failures[i].empty()) continue;
        if (failure_is_limit[i]) throw ResourceLimit(failures[i]);
        throw Error(failures[i]);
    }
    return dedupe(std::move(records));
}

std::optional<double> spearman_rank(const std::vector<std::pair<double, double>>& xy) {
    std::size_t n = xy.size();
    if (n < 2) return std::nullopt;
    auto ranks = [n](std::vector<double> vals) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        std::vector<double> rank(n);
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j + 1 < n && vals[order[j + 1]] == vals[order[i]]) ++j;
            double avg = (double(i) + double(j)) / 2.0 + 1.0;
            for (std::size_t t = i; t <= j; ++t) rank[order[t]] = avg;
            i = j + 1;
        }
        return rank;
    };
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = xy[i].first;
        ys[i] = xy[i].second;
    }
    std::vector<double> rx = ranks(xs), ry = ranks(ys);
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= double(n);
    my /= double(n);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0 || syy == 0) return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace qmsd
