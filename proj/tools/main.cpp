// Command-line front end: validate -> realize -> deform -> certify ->
// simulate -> report. Numeric values that may exceed 64 bits are emitted
// as decimal strings in JSON so that outputs re-parse losslessly.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sumset/groebner.hpp"
#include "sumset/lexideal.hpp"
#include "sumset/macaulay.hpp"
#include "sumset/monomial.hpp"
#include "sumset/semigroup.hpp"

using json = nlohmann::ordered_json;
using namespace sumset;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidSequence = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitZeroSequence = 3;
constexpr int kExitRealizationFailed = 4;
constexpr int kExitInternal = 70;

int min_column_width() {
    if (const char* env = std::getenv("SUMSET_WIDTH")) {
        const int w = std::atoi(env);
        if (w > 0 && w <= 40) return w;
    }
    return 0;
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    const int min_width = min_column_width();
    std::vector<std::size_t> widths(rows.front().size(), static_cast<std::size_t>(min_width));
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) std::cout << "  ";
            std::cout << std::string(widths[c] - row[c].size(), ' ') << row[c];
        }
        std::cout << '\n';
    }
}

void emit(const json& doc, bool as_json) {
    if (as_json) std::cout << doc.dump(2) << '\n';
}

json rep_to_json(const BinomialRep& rep) {
    json parts = json::array();
    for (const auto& p : rep.parts)
        parts.push_back({{"top", p.top.str()}, {"index", p.index}});
    return parts;
}

std::string rep_to_text(const BinomialRep& rep) {
    std::string out;
    for (const auto& p : rep.parts) {
        if (!out.empty()) out += " + ";
        out += "C(" + p.top.str() + "," + std::to_string(p.index) + ")";
    }
    return out;
}

json sequence_to_json(const BoundSequence& seq) {
    json out = json::array();
    for (const auto& v : seq.values) out.push_back(v.str());
    return out;
}

json validation_to_json(const ValidationReport& report) {
    json out;
    out["valid"] = report.valid;
    if (report.violation_index) {
        out["violation_index"] = *report.violation_index;
        out["lhs"] = report.lhs.str();
        out["rhs"] = report.rhs.str();
    } else {
        out["violation_index"] = nullptr;
        out["lhs"] = nullptr;
        out["rhs"] = nullptr;
    }
    out["all_positive"] = report.all_positive;
    out["monotone"] = report.monotone;
    out["zero_tail_consistent"] = report.zero_tail_consistent;
    return out;
}

void print_validation_text(const BoundSequence& seq, const ValidationReport& report) {
    std::cout << "sequence: " << to_string(seq) << '\n';
    if (report.valid) {
        std::cout << "valid: yes\n";
    } else {
        std::cout << "valid: no\n";
        std::cout << "violation at index " << *report.violation_index << ": "
                  << report.lhs.str() << " > " << report.rhs.str() << '\n';
    }
    std::cout << "all positive: " << (report.all_positive ? "yes" : "no")
              << (report.all_positive ? " (sharp realization available)" : "") << '\n';
    if (report.monotone)
        std::cout << "monotone: yes (group realization not excluded)\n";
    else
        std::cout << "monotone: no (not realizable in any abelian group)\n";
}

json certificate_to_json(const CheckReport& report) {
    json out;
    out["pass"] = report.pass;
    if (report.failure) {
        out["failing_pair"] = {static_cast<long long>(report.failure->i),
                               static_cast<long long>(report.failure->j)};
        out["remainder"] = to_string(report.failure->remainder);
    } else {
        out["failing_pair"] = nullptr;
        out["remainder"] = nullptr;
    }
    return out;
}

struct ParsedCommon {
    BoundSequence seq;
    ValidationReport report;
};

// parse + validate; on failure prints the report and returns an exit code
std::optional<ParsedCommon> load_sequence(const std::string& text, bool as_json, int& exit_code) {
    ParsedCommon out;
    try {
        out.seq = parse_sequence(text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        exit_code = kExitMalformed;
        return std::nullopt;
    }
    out.report = validate_sequence(out.seq);
    if (!out.report.valid) {
        json doc;
        doc["command"] = "validate";
        doc["sequence"] = sequence_to_json(out.seq);
        doc.update(validation_to_json(out.report));
        emit(doc, as_json);
        if (!as_json) print_validation_text(out.seq, out.report);
        exit_code = kExitInvalidSequence;
        return std::nullopt;
    }
    return out;
}

int cmd_bound(const std::vector<std::string>& upper, const std::vector<std::string>& lower,
              const std::vector<std::string>& plunnecke, bool as_json) {
    try {
        json doc;
        doc["command"] = "bound";
        if (!upper.empty()) {
            const BigInt a = parse_bigint(upper[0]);
            const int h = static_cast<int>(std::stoll(upper[1]));
            if (h < 1 || h > 10000) throw std::invalid_argument("h out of range [1, 10000]");
            const BigInt value = macaulay_upper(a, h);
            doc["query"] = "upper";
            doc["a"] = a.str();
            doc["h"] = h;
            doc["value"] = value.str();
            if (a > 0) {
                const auto rep = h_binomial_rep(a, h);
                doc["representation"] = rep_to_json(rep);
                if (!as_json) {
                    std::cout << a.str() << " = " << rep_to_text(rep) << '\n';
                    std::cout << "upper bound for the next size: " << value.str() << '\n';
                }
            } else if (!as_json) {
                std::cout << "upper bound for the next size: 0\n";
            }
        } else if (!lower.empty()) {
            const BigInt target = parse_bigint(lower[0]);
            const int h = static_cast<int>(std::stoll(lower[1]));
            if (h < 1 || h > 10000) throw std::invalid_argument("h out of range [1, 10000]");
            const BigInt value = macaulay_lower_inverse(target, h);
            doc["query"] = "lower-inverse";
            doc["target"] = target.str();
            doc["h"] = h;
            doc["value"] = value.str();
            doc["representation"] = rep_to_json(h_binomial_rep(value, h));
            if (!as_json) {
                std::cout << "least a with bound(a) >= " << target.str() << ": "
                          << value.str() << " = " << rep_to_text(h_binomial_rep(value, h))
                          << '\n';
            }
        } else {
            const BigInt d = parse_bigint(plunnecke[0]);
            const int i = static_cast<int>(std::stoll(plunnecke[1]));
            const int h = static_cast<int>(std::stoll(plunnecke[2]));
            if (i < 1 || i > 10000 || h < 1 || h > 10000)
                throw std::invalid_argument("indices out of range [1, 10000]");
            doc["query"] = "plunnecke";
            doc["d"] = d.str();
            doc["i"] = i;
            doc["h"] = h;
            if (h >= i) {
                const BigInt value = plunnecke_upper(d, i, h);
                doc["direction"] = "upper";
                doc["value"] = value.str();
                if (!as_json)
                    std::cout << "|" << h << "A| <= " << value.str() << '\n';
            } else {
                const BigInt value = plunnecke_lower(d, i, h);
                doc["direction"] = "lower";
                doc["value"] = value.str();
                if (!as_json)
                    std::cout << "|" << h << "A| >= " << value.str() << '\n';
            }
        }
        emit(doc, as_json);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    }
}

int cmd_validate(const std::string& text, bool as_json) {
    int exit_code = kExitOk;
    auto loaded = load_sequence(text, as_json, exit_code);
    if (!loaded) return exit_code;
    json doc;
    doc["command"] = "validate";
    doc["sequence"] = sequence_to_json(loaded->seq);
    doc.update(validation_to_json(loaded->report));
    emit(doc, as_json);
    if (!as_json) print_validation_text(loaded->seq, loaded->report);
    return kExitOk;
}

json generators_to_json(const LexIdeal& ideal) {
    json out = json::array();
    for (int i = 0; i <= ideal.degree_cap; ++i) {
        const auto& bucket = ideal.generators[static_cast<std::size_t>(i)];
        if (bucket.empty()) continue;
        json names = json::array();
        for (const auto& g : bucket) names.push_back(to_string(g));
        out.push_back({{"degree", i}, {"monomials", names}});
    }
    return out;
}

json segments_to_json(const LexIdeal& ideal) {
    json out = json::array();
    for (int i = 1; i <= ideal.degree_cap; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        out.push_back({{"degree", i},
                       {"slice", degree_count(ideal.nvars, i).str()},
                       {"ideal", ideal.segment_sizes[idx].str()},
                       {"quotient", ideal.hilbert[idx].str()}});
    }
    return out;
}

void print_realize_text(const LexIdeal& ideal) {
    std::cout << "variables: " << ideal.nvars << ", degree cap: " << ideal.degree_cap << '\n';
    std::vector<std::vector<std::string>> table{{"degree", "|M_i|", "ideal", "quotient"}};
    for (int i = 1; i <= ideal.degree_cap; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        table.push_back({std::to_string(i), degree_count(ideal.nvars, i).str(),
                         ideal.segment_sizes[idx].str(), ideal.hilbert[idx].str()});
    }
    print_table(table);
    std::cout << "minimal generators:\n";
    for (int i = 0; i <= ideal.degree_cap; ++i)
        for (const auto& g : ideal.generators[static_cast<std::size_t>(i)])
            std::cout << "  " << to_string(g) << '\n';
}

int cmd_realize(const std::string& text, bool deform_too, int max_degree, bool as_json) {
    int exit_code = kExitOk;
    auto loaded = load_sequence(text, as_json, exit_code);
    if (!loaded) return exit_code;
    BoundSequence seq = loaded->seq;
    if (max_degree >= 0 && max_degree < seq.max_index())
        seq.values.resize(static_cast<std::size_t>(max_degree) + 1);
    if (seq.max_index() < 1 || seq.values[1] < 1) {
        std::cerr << "error: need d_1 >= 1 to realize\n";
        return kExitInvalidSequence;
    }
    if (deform_too && !loaded->report.all_positive) {
        std::cerr << "error: the sequence has a zero, no sharp realization exists\n";
        return kExitZeroSequence;
    }

    const LexIdeal ideal = build_lexideal(seq);
    json doc;
    doc["command"] = "realize";
    doc["sequence"] = sequence_to_json(seq);
    doc["nvars"] = ideal.nvars;
    doc["degree_cap"] = ideal.degree_cap;
    doc["segments"] = segments_to_json(ideal);
    doc["generators"] = generators_to_json(ideal);
    if (!as_json) print_realize_text(ideal);

    if (deform_too) {
        BinomialBasis basis = deform(ideal);
        const auto cert = certify(basis);
        std::vector<DiffBinomial> display(basis.elements);
        std::sort(display.begin(), display.end(),
                  [](const DiffBinomial& a, const DiffBinomial& b) {
                      if (a.lead.degree() != b.lead.degree())
                          return a.lead.degree() < b.lead.degree();
                      return grlex_greater(a.lead, b.lead);
                  });
        json binomials = json::array();
        for (const auto& f : display) binomials.push_back(to_string(f));
        doc["deformed"] = binomials;
        doc["certificate"] = certificate_to_json(cert);
        if (!as_json) {
            std::cout << "deformed binomials:\n";
            for (const auto& f : display) std::cout << "  " << to_string(f) << '\n';
            std::cout << "buchberger certificate: " << (cert.pass ? "pass" : "FAIL") << '\n';
            if (cert.failure)
                std::cout << "  pair (" << cert.failure->i << ", " << cert.failure->j
                          << ") leaves remainder " << to_string(cert.failure->remainder)
                          << '\n';
        }
    }
    emit(doc, as_json);
    return kExitOk;
}

int cmd_verify(const std::string& text, const std::string& mode, bool check_gb,
               int max_degree, bool as_json) {
    int exit_code = kExitOk;
    auto loaded = load_sequence(text, as_json, exit_code);
    if (!loaded) return exit_code;
    BoundSequence seq = loaded->seq;
    if (max_degree >= 0 && max_degree < seq.max_index())
        seq.values.resize(static_cast<std::size_t>(max_degree) + 1);
    if (seq.max_index() < 1 || seq.values[1] < 1) {
        std::cerr << "error: need d_1 >= 1 to realize\n";
        return kExitInvalidSequence;
    }
    const bool sharp = mode == "sharp";
    if ((sharp || check_gb) && !loaded->report.all_positive) {
        std::cerr << "error: the sequence has a zero, no sharp realization exists\n";
        return kExitZeroSequence;
    }

    const LexIdeal ideal = build_lexideal(seq);
    const PowerSeries almost = monomial_quotient_powers(ideal);

    std::optional<PowerSeries> sharp_series;
    json certificate;
    bool completion_used = false;
    if (sharp || check_gb) {
        BinomialBasis basis = deform(ideal);
        const auto cert = certify(basis);
        certificate = certificate_to_json(cert);
        if (!cert.pass) {
            const BinomialBasis completed = buchberger_complete(basis);
            completion_used = true;
            if (!leading_ideal_matches(completed, ideal)) {
                json doc;
                doc["command"] = "verify";
                doc["mode"] = mode;
                doc["sequence"] = sequence_to_json(seq);
                doc["certificate"] = certificate;
                doc["completion_used"] = true;
                doc["achieved"] = false;
                doc["reason"] = "completion changed the leading ideal";
                emit(doc, as_json);
                if (!as_json)
                    std::cout << "certificate failed and completion changed the leading "
                                 "ideal: realization not achieved\n";
                return kExitRealizationFailed;
            }
            basis = completed;
        }
        if (sharp) sharp_series = binomial_quotient_powers(basis, ideal);
    }

    bool achieved = true;
    json rows = json::array();
    std::vector<std::vector<std::string>> table{
        {"degree", "target", "monomial", "binomial", "macaulay", "plunnecke"}};
    for (int h = 0; h <= ideal.degree_cap; ++h) {
        const std::size_t idx = static_cast<std::size_t>(h);
        const BigInt& target = seq.values[idx];
        const BigInt& mono_size = almost.sizes[idx];
        json row;
        row["degree"] = h;
        row["target"] = target.str();
        row["monomial_size"] = mono_size.str();
        std::string binomial_text = "-";
        if (sharp_series) {
            row["binomial_size"] = sharp_series->sizes[idx].str();
            binomial_text = sharp_series->sizes[idx].str();
            if (sharp_series->sizes[idx] != target) achieved = false;
        } else {
            row["binomial_size"] = nullptr;
        }
        if (mono_size < target || mono_size > target + 1) achieved = false;
        std::string macaulay_text = "-", plunnecke_text = "-";
        if (h >= 2) {
            const BigInt& prev = seq.values[idx - 1];
            const BigInt mac = macaulay_upper(prev, h - 1);
            row["macaulay_bound"] = mac.str();
            macaulay_text = mac.str();
            if (prev > 0) {
                const BigInt plu = plunnecke_upper(prev, h - 1, h);
                row["plunnecke_bound"] = plu.str();
                plunnecke_text = plu.str();
            } else {
                row["plunnecke_bound"] = nullptr;
            }
        } else {
            row["macaulay_bound"] = nullptr;
            row["plunnecke_bound"] = nullptr;
        }
        rows.push_back(row);
        table.push_back({std::to_string(h), target.str(), mono_size.str(), binomial_text,
                         macaulay_text, plunnecke_text});
    }

    json doc;
    doc["command"] = "verify";
    doc["mode"] = mode;
    doc["sequence"] = sequence_to_json(seq);
    doc["rows"] = rows;
    if (sharp || check_gb) {
        doc["certificate"] = certificate;
        doc["completion_used"] = completion_used;
    }
    doc["achieved"] = achieved;
    emit(doc, as_json);
    if (!as_json) {
        print_table(table);
        if (sharp || check_gb)
            std::cout << "buchberger certificate: "
                      << (certificate["pass"].get<bool>() ? "pass" : "FAIL")
                      << (completion_used ? " (completed)" : "") << '\n';
        std::cout << "realization " << (achieved ? "achieved" : "NOT achieved") << '\n';
    }
    return achieved ? kExitOk : kExitRealizationFailed;
}

json sample_to_json(const AdditiveSample& sample) {
    return {{"subset", sample.subset},
            {"sum_size", sample.sum_size},
            {"lex_sum_size", sample.lex_sum_size}};
}

int cmd_additive_check(int n, int h, bool exhaustive, long long samples,
                       std::optional<unsigned long long> seed, bool as_json) {
    if (n < 1 || h < 1) {
        std::cerr << "error: n and h must be >= 1\n";
        return kExitMalformed;
    }
    AdditiveCheckReport report;
    try {
        if (exhaustive) {
            report = additive_macaulay_check_exhaustive(n, h);
        } else {
            if (samples < 1) {
                std::cerr << "error: --samples must be >= 1\n";
                return kExitMalformed;
            }
            const std::uint64_t chosen_seed = seed ? *seed : std::random_device{}();
            report = additive_macaulay_check_sampled(n, h, static_cast<std::uint64_t>(samples),
                                                     chosen_seed);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    }

    json doc;
    doc["command"] = "additive-check";
    doc["n"] = n;
    doc["h"] = h;
    doc["mode"] = report.exhaustive ? "exhaustive" : "sampled";
    if (report.exhaustive)
        doc["seed"] = nullptr;
    else
        doc["seed"] = report.seed;
    doc["subsets_tested"] = report.subsets_tested;
    doc["violation_count"] = report.violations.size();
    json violations = json::array();
    for (const auto& v : report.violations) violations.push_back(sample_to_json(v));
    doc["violations"] = violations;
    doc["tightest"] = report.tightest ? sample_to_json(*report.tightest) : json(nullptr);
    emit(doc, as_json);
    if (!as_json) {
        std::cout << "tested " << report.subsets_tested << " subsets of the degree-" << h
                  << " slice in " << n << " variables\n";
        if (!report.exhaustive) std::cout << "seed: " << report.seed << '\n';
        std::cout << "violations of |A+B| >= |Alex+B|: " << report.violations.size() << '\n';
        if (report.tightest) {
            std::cout << "tightest subset: {";
            for (std::size_t k = 0; k < report.tightest->subset.size(); ++k)
                std::cout << (k ? ", " : "") << report.tightest->subset[k];
            std::cout << "} with |A+B| = " << report.tightest->sum_size
                      << ", |Alex+B| = " << report.tightest->lex_sum_size << '\n';
        }
    }
    return report.violations.empty() ? kExitOk : kExitRealizationFailed;
}

int cmd_oracle(const std::string& points_text, int max_degree, bool as_json) {
    std::vector<AdditivePoint> points;
    try {
        std::istringstream in(points_text);
        std::string point_text;
        while (std::getline(in, point_text, ';')) {
            AdditivePoint point;
            std::istringstream coords(point_text);
            std::string coord;
            while (std::getline(coords, coord, ','))
                point.push_back(std::stoll(coord));
            if (point.empty()) throw std::invalid_argument("empty point");
            points.push_back(std::move(point));
        }
        if (max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
        if (points.empty()) throw std::invalid_argument("no points given");
    } catch (const std::exception& e) {
        std::cerr << "error: bad point list: " << e.what() << '\n';
        return kExitMalformed;
    }

    PowerSeries series;
    try {
        series = naive_sumset_powers(points, max_degree);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    }
    const BoundReport bounds = bound_report(series);

    json doc;
    doc["command"] = "oracle";
    json pts = json::array();
    for (const auto& p : points) pts.push_back(p);
    doc["points"] = pts;
    json sizes = json::array();
    for (const auto& s : series.sizes) sizes.push_back(s.str());
    doc["sizes"] = sizes;
    json rows = json::array();
    for (const auto& row : bounds.rows)
        rows.push_back({{"h", row.h},
                        {"size", row.size.str()},
                        {"next", row.next.str()},
                        {"macaulay_bound", row.macaulay_bound.str()},
                        {"plunnecke_bound", row.plunnecke_bound.str()},
                        {"holds", row.holds}});
    doc["bounds"] = rows;
    doc["all_hold"] = bounds.all_hold;
    emit(doc, as_json);
    if (!as_json) {
        std::vector<std::vector<std::string>> table{{"h", "|hA|"}};
        for (int h = 0; h <= series.max_degree(); ++h)
            table.push_back({std::to_string(h), series.sizes[static_cast<std::size_t>(h)].str()});
        print_table(table);
        std::cout << "macaulay growth bound holds at every step: "
                  << (bounds.all_hold ? "yes" : "NO") << '\n';
    }
    return bounds.all_hold ? kExitOk : kExitRealizationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Macaulay-type bounds on iterated sumset growth, with constructive "
                 "realization in quotient semigroups"};
    app.require_subcommand(1);
    app.fallthrough();  // let --format appear after the subcommand
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* bound = app.add_subcommand("bound", "binomial-representation growth bounds");
    std::vector<std::string> upper, lower, plunnecke;
    auto* upper_opt = bound->add_option("--upper", upper, "a h: the bound a^<h>")->expected(2);
    auto* lower_opt =
        bound->add_option("--lower-inverse", lower, "target h: least a with a^<h> >= target")
            ->expected(2);
    auto* plun_opt = bound
                         ->add_option("--plunnecke", plunnecke,
                                      "d i h: bound |hA| given |iA| = d (upper for h >= i, "
                                      "lower for h < i)")
                         ->expected(3);
    upper_opt->excludes(lower_opt)->excludes(plun_opt);
    lower_opt->excludes(plun_opt);

    auto* validate = app.add_subcommand("validate", "check the Macaulay growth conditions");
    std::string validate_seq;
    validate->add_option("sequence", validate_seq, "comma-separated sizes d_0,d_1,...")
        ->required();

    auto* realize = app.add_subcommand("realize", "construct the lexideal for a sequence");
    std::string realize_seq;
    bool realize_deform = false;
    int realize_maxdeg = -1;
    realize->add_option("sequence", realize_seq, "comma-separated sizes")->required();
    realize->add_flag("--deform", realize_deform, "also emit the binomial deformation");
    realize->add_option("--max-degree", realize_maxdeg, "truncate the sequence here");

    auto* verify = app.add_subcommand("verify", "realize a sequence and simulate the powers");
    std::string verify_seq;
    std::string verify_mode = "sharp";
    bool verify_check_gb = false;
    int verify_maxdeg = -1;
    verify->add_option("sequence", verify_seq, "comma-separated sizes")->required();
    verify->add_option("--mode", verify_mode, "sharp or almost")
        ->check(CLI::IsMember({"sharp", "almost"}))
        ->capture_default_str();
    verify->add_flag("--check-gb", verify_check_gb, "report the Buchberger certificate");
    verify->add_option("--max-degree", verify_maxdeg, "truncate the sequence here");

    auto* additive = app.add_subcommand("additive-check", "test |A+B| >= |Alex+B| over hB");
    int add_n = 0, add_h = 0;
    bool add_exhaustive = false;
    long long add_samples = 0;
    std::optional<unsigned long long> add_seed;
    additive->add_option("nvars", add_n, "number of variables")->required();
    additive->add_option("degree", add_h, "degree of the ambient slice")->required();
    auto* ex_flag = additive->add_flag("--exhaustive", add_exhaustive, "all nonempty subsets");
    auto* samples_opt =
        additive->add_option("--samples", add_samples, "number of random subsets");
    additive->add_option("--seed", add_seed, "seed for sampling");
    ex_flag->excludes(samples_opt);

    auto* oracle = app.add_subcommand("oracle", "naive iterated sumsets of a point list");
    std::string oracle_points;
    int oracle_maxdeg = 5;
    oracle
        ->add_option("--points", oracle_points,
                     "semicolon-separated points, comma-separated coordinates (\"0;1;3\")")
        ->required();
    oracle->add_option("--max-degree", oracle_maxdeg, "compute |hA| up to this h")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitMalformed;
    }

    const bool as_json = format == "json";
    try {
        if (bound->parsed()) {
            if (upper.empty() && lower.empty() && plunnecke.empty()) {
                std::cerr << "error: pick one of --upper, --lower-inverse, --plunnecke\n";
                return kExitMalformed;
            }
            return cmd_bound(upper, lower, plunnecke, as_json);
        }
        if (validate->parsed()) return cmd_validate(validate_seq, as_json);
        if (realize->parsed())
            return cmd_realize(realize_seq, realize_deform, realize_maxdeg, as_json);
        if (verify->parsed())
            return cmd_verify(verify_seq, verify_mode, verify_check_gb, verify_maxdeg, as_json);
        if (additive->parsed()) {
            if (!add_exhaustive && add_samples == 0) {
                std::cerr << "error: pick --exhaustive or --samples K\n";
                return kExitMalformed;
            }
            return cmd_additive_check(add_n, add_h, add_exhaustive, add_samples, add_seed,
                                      as_json);
        }
        if (oracle->parsed()) return cmd_oracle(oracle_points, oracle_maxdeg, as_json);
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    }
    return kExitMalformed;
}
