// Command-line front end: construct / verify / survey / convert.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "dpforge/canonical.hpp"
#include "dpforge/constructions.hpp"
#include "dpforge/enumeration.hpp"
#include "dpforge/graph6.hpp"
#include "dpforge/havel_hakimi.hpp"
#include "dpforge/isometry.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr int kBruteForceCap = 13;
constexpr int kSurveyRegularCap = 10;      // beyond this --deep is required
constexpr int kSurveyRegularDeepCap = 13;
constexpr int kSurveyHhCap = 12;

dpforge::GraphFormat parse_format(const std::string& name) {
    if (name == "graph6") return dpforge::GraphFormat::graph6;
    if (name == "edges") return dpforge::GraphFormat::edges;
    if (name == "dot") return dpforge::GraphFormat::dot;
    throw CLI::ValidationError("--format", "unknown format: " + name);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + out_path);
    out << text;
}

int resolve_jobs(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("DPFORGE_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string residual_string(const std::vector<int>& residual) {
    std::string s = "(";
    for (size_t i = 0; i < residual.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(residual[i]);
    }
    return s + ")";
}

dpforge::Graph load_graph(const std::string& path, const std::string& format_name) {
    if (!format_name.empty()) return dpforge::read_graph_file(path, parse_format(format_name));
    return dpforge::read_graph_file(path);
}

// ---- construct ----------------------------------------------------------

struct ConstructRegularArgs {
    int n = 0;
    int r = 0;
    std::string format = "graph6";
    std::string out;
    std::string certificate_path;
};

int run_construct_regular(const ConstructRegularArgs& a) {
    if (!dpforge::is_admissible(a.n, a.r)) {
        std::cerr << "inadmissible pair (" << a.n << "," << a.r
                  << "): need r >= 3, n >= r+1, and n even when r is odd\n";
        return 2;
    }
    const dpforge::RegularDpResult result = dpforge::build_regular_dp(a.n, a.r);
    write_output(dpforge::format_graph(result.tagged.graph, parse_format(a.format)), a.out);
    if (!a.certificate_path.empty())
        write_output(dpforge::certificate_to_text(result.certificate), a.certificate_path);
    return 0;
}

struct ConstructHhArgs {
    std::string sequence;
    std::string sequence_file;
    bool modified = false;
    std::string format = "graph6";
    std::string out;
    std::string certificate_path;
};

// Batch mode: one comma-separated sequence per line, one graph6 line out
// per realized sequence. Failures are reported on stderr; exit 2 if any.
int run_construct_hh_file(const ConstructHhArgs& a) {
    if (!a.certificate_path.empty()) {
        std::cerr << "--emit-certificate is not available in --sequence-file mode\n";
        return 1;
    }
    std::ifstream in(a.sequence_file);
    if (!in) {
        std::cerr << "error: cannot open sequence file: " << a.sequence_file << "\n";
        return 1;
    }
    std::ostringstream collected;
    std::string line;
    int line_no = 0, failed = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        const dpforge::DegreeSequence seq = dpforge::DegreeSequence::parse(line);
        const dpforge::HHOutcome outcome =
            a.modified ? dpforge::havel_hakimi_modified(seq) : dpforge::havel_hakimi_classic(seq);
        if (outcome.status == dpforge::HHStatus::failure) {
            ++failed;
            std::cerr << "line " << line_no << ": failed with residual "
                      << residual_string(outcome.residual) << "\n";
            continue;
        }
        collected << dpforge::encode_graph6(*outcome.graph) << "\n";
    }
    write_output(collected.str(), a.out);
    return failed == 0 ? 0 : 2;
}

int run_construct_hh(const ConstructHhArgs& a) {
    if (!a.sequence_file.empty()) return run_construct_hh_file(a);
    const dpforge::DegreeSequence seq = dpforge::DegreeSequence::parse(a.sequence);
    const dpforge::HHOutcome outcome =
        a.modified ? dpforge::havel_hakimi_modified(seq) : dpforge::havel_hakimi_classic(seq);
    if (outcome.status == dpforge::HHStatus::failure) {
        std::cerr << (a.modified ? "modified" : "classic")
                  << " havel-hakimi failed after " << outcome.iterations
                  << " iterations with residual " << residual_string(outcome.residual) << "\n";
        return 2;
    }
    write_output(dpforge::format_graph(*outcome.graph, parse_format(a.format)), a.out);
    if (!a.certificate_path.empty()) {
        if (!a.modified) {
            std::cerr << "certificates are only derived from --modified runs\n";
            return 2;
        }
        if (!dpforge::is_connected(*outcome.graph)) {
            std::cerr << "realized graph is disconnected; no certificate applies\n";
            return 2;
        }
        write_output(dpforge::certificate_to_text(dpforge::prefix_certificate(outcome)),
                     a.certificate_path);
    }
    return 0;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
    std::string in;
    std::string input_format;
    bool brute = false;
    std::string certificate_path;
    int cap = kBruteForceCap;
    std::string json_path;
};

int run_verify(const VerifyArgs& a) {
    const dpforge::Graph g = load_graph(a.in, a.input_format);
    ordered_json report;
    report["schema_version"] = kSchemaVersion;
    report["n"] = g.vertex_count();

    int exit_code = 0;
    if (a.brute) {
        if (g.vertex_count() > a.cap) {
            std::cerr << "n = " << g.vertex_count() << " exceeds the brute-force cap " << a.cap
                      << " (raise it with --cap)\n";
            return 2;
        }
        const dpforge::DpReport dp = dpforge::dp_bruteforce(g);
        report["mode"] = "brute";
        report["is_dp"] = dp.is_dp;
        report["first_failing_order"] =
            dp.first_failing_order ? ordered_json(*dp.first_failing_order) : ordered_json(nullptr);
        ordered_json witnesses = ordered_json::object();
        for (int k = 1; k <= g.vertex_count(); ++k) {
            const auto& w = dp.witness[k - 1];
            witnesses[std::to_string(k)] = w ? ordered_json(*w) : ordered_json(nullptr);
        }
        report["witnesses"] = std::move(witnesses);
        if (dp.is_dp) {
            std::cout << "dp\n";
        } else {
            std::cout << "not dp, first failing order " << *dp.first_failing_order << "\n";
            exit_code = 1;
        }
    } else {
        std::ifstream in(a.certificate_path);
        if (!in) throw std::invalid_argument("cannot open certificate: " + a.certificate_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        const dpforge::DpCertificate cert = dpforge::certificate_from_text(buf.str());
        const dpforge::CertificateCheck check = dpforge::verify_certificate(g, cert);
        report["mode"] = "certificate";
        report["valid"] = check.valid;
        report["first_failing_order"] = check.first_failing_order
                                            ? ordered_json(*check.first_failing_order)
                                            : ordered_json(nullptr);
        if (check.valid) {
            std::cout << "certificate valid\n";
        } else {
            std::cout << "certificate invalid at order " << *check.first_failing_order << "\n";
            exit_code = 1;
        }
    }
    if (!a.json_path.empty()) write_output(report.dump(2) + "\n", a.json_path);
    return exit_code;
}

// ---- survey -------------------------------------------------------------

struct SurveyArgs {
    int max_n = 0;
    bool deep = false;
    std::string json_path;
    std::string dump_dir;
    int jobs = 0;
};

void print_survey_table(const std::vector<dpforge::SurveyRow>& rows, const char* object_header,
                        const char* success_header, const char* pct_header) {
    std::printf("%3s  %*s  %*s  %10s\n", "n", 22, object_header, 12, success_header, pct_header);
    for (const auto& row : rows)
        std::printf("%3d  %22lld  %12lld  %10s\n", row.n, row.total, row.successes,
                    dpforge::percentage_string(row.successes, row.total).c_str());
}

void emit_survey_json(const std::vector<dpforge::SurveyRow>& rows, const std::string& table,
                      const std::string& json_path) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["table"] = table;
    doc["rows"] = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json r;
        r["n"] = row.n;
        r["total"] = row.total;
        r["successes"] = row.successes;
        r["percentage"] = dpforge::percentage_string(row.successes, row.total);
        doc["rows"].push_back(std::move(r));
    }
    write_output(doc.dump(2) + "\n", json_path);
}

int run_survey_regular(const SurveyArgs& a) {
    const int cap = a.deep ? kSurveyRegularDeepCap : kSurveyRegularCap;
    if (a.max_n > cap) {
        std::cerr << "--max-n " << a.max_n << " exceeds the cap " << cap
                  << (a.deep ? "\n" : " (allow n <= 13 with --deep; expect hours at n = 13)\n");
        return 2;
    }
    if (a.max_n < 5) {
        std::cerr << "--max-n must be at least 5\n";
        return 2;
    }
    const int jobs = resolve_jobs(a.jobs);
    std::vector<dpforge::SurveyRow> rows;
    for (int n = 5; n <= a.max_n; ++n) {
        if (!a.dump_dir.empty()) {
            namespace fs = std::filesystem;
            fs::create_directories(a.dump_dir);
            int idx = 0;
            dpforge::enumerate_connected_regular(n, [&](const dpforge::Graph& g) {
                char name[64];
                std::snprintf(name, sizeof(name), "n%02d_%06d.g6", n, idx++);
                std::ofstream out(fs::path(a.dump_dir) / name, std::ios::binary);
                out << dpforge::encode_graph6(g) << "\n";
            });
        }
        rows.push_back(dpforge::survey_regular_dp(n, jobs));
    }
    if (a.json_path != "-")
        print_survey_table(rows, "#connected-regular", "#dp", "%dp");
    if (!a.json_path.empty()) emit_survey_json(rows, "regular_dp", a.json_path);
    return 0;
}

int run_survey_hh(const SurveyArgs& a) {
    if (a.max_n > kSurveyHhCap) {
        std::cerr << "--max-n " << a.max_n << " exceeds the cap " << kSurveyHhCap << "\n";
        return 2;
    }
    if (a.max_n < 5) {
        std::cerr << "--max-n must be at least 5\n";
        return 2;
    }
    std::vector<dpforge::SurveyRow> rows;
    for (int n = 5; n <= a.max_n; ++n) rows.push_back(dpforge::survey_modified_hh(n));
    if (a.json_path != "-")
        print_survey_table(rows, "#graphical-sequences", "#successes", "%successes");
    if (!a.json_path.empty()) emit_survey_json(rows, "modified_hh", a.json_path);
    return 0;
}

// ---- convert ------------------------------------------------------------

struct ConvertArgs {
    std::string in;
    std::string input_format;
    std::string format;
    std::string out;
};

int run_convert(const ConvertArgs& a) {
    const dpforge::Graph g = load_graph(a.in, a.input_format);
    write_output(dpforge::format_graph(g, parse_format(a.format)), a.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regular distance-preserving graph constructions, checks, and surveys"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a graph");
    construct->require_subcommand(1);

    ConstructRegularArgs cr;
    auto* c_regular = construct->add_subcommand("regular", "regular dp graph for (n, r)");
    c_regular->add_option("--n", cr.n, "vertex count")->required();
    c_regular->add_option("--r", cr.r, "degree")->required();
    c_regular->add_option("--format", cr.format, "graph6|edges|dot")
        ->check(CLI::IsMember({"graph6", "edges", "dot"}));
    c_regular->add_option("--out", cr.out, "output path (default stdout)");
    c_regular->add_option("--emit-certificate", cr.certificate_path, "write the certificate here");

    ConstructHhArgs ch;
    auto* c_hh = construct->add_subcommand("hh", "havel-hakimi realization of a degree sequence");
    auto* seq_opt =
        c_hh->add_option("--sequence", ch.sequence, "comma-separated weakly decreasing sequence");
    auto* seq_file_opt = c_hh->add_option("--sequence-file", ch.sequence_file,
                                          "file with one comma-separated sequence per line");
    seq_opt->excludes(seq_file_opt);
    c_hh->add_flag("--modified", ch.modified, "fixed-order variant (no re-sorting)");
    c_hh->add_option("--format", ch.format, "graph6|edges|dot")
        ->check(CLI::IsMember({"graph6", "edges", "dot"}));
    c_hh->add_option("--out", ch.out, "output path (default stdout)");
    c_hh->add_option("--emit-certificate", ch.certificate_path, "write the certificate here");

    // verify
    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check the dp property or a certificate");
    verify->add_option("--in", va.in, "input graph (.g6 or .edges; - for stdin)")->required();
    verify->add_option("--input-format", va.input_format, "graph6|edges")
        ->check(CLI::IsMember({"graph6", "edges"}));
    auto* brute_flag = verify->add_flag("--brute", va.brute, "exhaustive per-order search");
    auto* cert_opt =
        verify->add_option("--certificate", va.certificate_path, "certificate file to check");
    brute_flag->excludes(cert_opt);
    verify->add_option("--cap", va.cap, "brute-force size cap (default 13)");
    verify->add_option("--json", va.json_path, "write a JSON report (- for stdout)");

    // survey
    auto* survey = app.add_subcommand("survey", "exhaustive survey tables");
    survey->require_subcommand(1);

    SurveyArgs sr;
    auto* s_regular = survey->add_subcommand("regular", "connected regular graphs vs dp");
    s_regular->add_option("--max-n", sr.max_n, "largest order (5..10, or 13 with --deep)")
        ->required();
    s_regular->add_flag("--deep", sr.deep, "allow n up to 13 (slow)");
    s_regular->add_option("--json", sr.json_path, "write a JSON report (- for stdout)");
    s_regular->add_option("--dump-graphs", sr.dump_dir, "write one graph6 file per class");
    s_regular->add_option("--jobs", sr.jobs, "worker threads (default: cores or DPFORGE_JOBS)");

    SurveyArgs sh;
    auto* s_hh = survey->add_subcommand("hh", "graphical sequences vs fixed-order successes");
    s_hh->add_option("--max-n", sh.max_n, "largest length (5..12)")->required();
    s_hh->add_option("--json", sh.json_path, "write a JSON report (- for stdout)");

    // convert
    ConvertArgs cv;
    auto* convert = app.add_subcommand("convert", "convert between graph formats");
    convert->add_option("--in", cv.in, "input graph (.g6 or .edges; - for stdin)")->required();
    convert->add_option("--input-format", cv.input_format, "graph6|edges")
        ->check(CLI::IsMember({"graph6", "edges"}));
    convert->add_option("--format", cv.format, "graph6|edges|dot")
        ->required()
        ->check(CLI::IsMember({"graph6", "edges", "dot"}));
    convert->add_option("--out", cv.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_regular->parsed()) return run_construct_regular(cr);
        if (c_hh->parsed()) {
            if (ch.sequence.empty() && ch.sequence_file.empty()) {
                std::cerr << "construct hh needs --sequence or --sequence-file\n";
                return 1;
            }
            return run_construct_hh(ch);
        }
        if (verify->parsed()) {
            if (!va.brute && va.certificate_path.empty()) {
                std::cerr << "verify needs exactly one of --brute or --certificate\n";
                return 1;
            }
            return run_verify(va);
        }
        if (s_regular->parsed()) return run_survey_regular(sr);
        if (s_hh->parsed()) return run_survey_hh(sh);
        if (convert->parsed()) return run_convert(cv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
