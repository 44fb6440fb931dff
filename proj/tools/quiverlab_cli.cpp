// quiverlab: command-line front end for bound quiver algebras.
//
// Exit codes: 0 success or all checks pass, 1 negative result or module
// error, 2 inconclusive or truncated result, 3 usage or I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quiverlab/ar.hpp"
#include "quiverlab/checks.hpp"
#include "quiverlab/families.hpp"
#include "quiverlab/gds.hpp"
#include "quiverlab/iso.hpp"
#include "quiverlab/quiver_io.hpp"
#include "quiverlab/strings.hpp"

namespace {

using namespace quiverlab;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kNegative = 1, kInconclusive = 2, kUsage = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    int max_length = kDefaultMaxLength;
    int cutoff = kDefaultCutoff;
    int truncate = kDefaultMaxDegree;
    std::string dot_path;
    std::string out_path;
};

Presentation load(const std::string& spec) {
    constexpr std::string_view prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) {
        const std::string name = spec.substr(prefix.size());
        if (auto p = families::builtin(name)) return *p;
        std::string known;
        for (const auto& n : families::builtin_names()) known += " " + n;
        throw IoError("unknown builtin '" + name + "'; known:" + known);
    }
    std::ifstream probe(spec);
    if (!probe) throw IoError("cannot open '" + spec + "'");
    return read_presentation_file(spec);
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path);
    if (!out) throw IoError("cannot write '" + opt.out_path + "'");
    out << text;
}

// Basis summary on stderr for constructed presentations.
int report_basis(const Presentation& p, const Options& opt) {
    const BasisReport r = path_basis(p, opt.truncate);
    if (r.truncated) {
        std::cerr << "basis truncated at degree " << r.degree_limit << " (" << r.dimension << " paths listed)\n";
        return kInconclusive;
    }
    std::cerr << "dimension " << r.dimension << "\n";
    return kOk;
}

int emit_presentation(const Presentation& p, const Options& opt) {
    emit(opt, serialize(p));
    return report_basis(p, opt);
}

int cmd_validate(const std::string& file, const Options& opt) {
    const Presentation p = load(file);
    const BasisReport basis = path_basis(p, opt.truncate);
    const StringPairReport sp = check_string_pair(p);
    const char* admissible = basis.truncated ? "unknown" : "yes";
    if (opt.json) {
        json j;
        j["vertices"] = p.quiver().vertex_count();
        j["arrows"] = p.quiver().arrow_count();
        j["relations"] = p.relations().size();
        j["monomial"] = p.is_monomial();
        if (basis.truncated) {
            j["dimension"] = nullptr;
            j["truncated_at_degree"] = basis.degree_limit;
        } else {
            j["dimension"] = basis.dimension;
        }
        j["admissible"] = admissible;
        j["string_pair"] = sp.ok ? json("pass") : json({{"condition", sp.condition}, {"witness", sp.witness}});
        emit(opt, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "vertices: " << p.quiver().vertex_count() << "\n"
            << "arrows: " << p.quiver().arrow_count() << "\n"
            << "relations: " << p.relations().size() << (p.is_monomial() ? " (monomial)" : "") << "\n";
        if (basis.truncated) {
            out << "dimension: unknown, basis truncated at degree " << basis.degree_limit << "\n";
        } else {
            out << "dimension: " << basis.dimension << "\n";
        }
        out << "admissible: " << admissible << "\n"
            << "string pair: " << (sp.ok ? "pass" : "fail " + sp.condition + " (" + sp.witness + ")") << "\n";
        emit(opt, out.str());
    }
    return basis.truncated ? kInconclusive : kOk;
}

int cmd_strings(const std::string& file, const Options& opt) {
    const Presentation p = load(file);
    const StringPairReport sp = check_string_pair(p);
    if (!sp.ok) {
        std::cerr << "not a string algebra: " << sp.condition << " (" << sp.witness << ")\n";
        return kNegative;
    }
    const StringList list = enumerate_strings(p, opt.max_length);
    if (opt.json) {
        json words = json::array();
        for (const auto& w : list.words) words.push_back(to_string(p.quiver(), w));
        emit(opt, json{{"strings", words}, {"truncated", list.truncated}}.dump(2) + "\n");
    } else {
        std::string text;
        for (const auto& w : list.words) text += to_string(p.quiver(), w) + "\n";
        emit(opt, text);
    }
    if (list.truncated) {
        std::cerr << "truncated: strings of length " << opt.max_length << " exist\n";
        return kInconclusive;
    }
    return kOk;
}

int cmd_bands(const std::string& file, const Options& opt) {
    const Presentation p = load(file);
    const StringPairReport sp = check_string_pair(p);
    if (!sp.ok) {
        std::cerr << "not a string algebra: " << sp.condition << " (" << sp.witness << ")\n";
        return kNegative;
    }
    const BandList list = detect_bands(p, opt.max_length);
    if (opt.json) {
        json bands = json::array();
        for (const auto& w : list.bands) bands.push_back(to_string(p.quiver(), w));
        emit(opt, json{{"bands", bands}, {"truncated", list.truncated}}.dump(2) + "\n");
    } else {
        std::string text;
        for (const auto& w : list.bands) text += to_string(p.quiver(), w) + "\n";
        emit(opt, text);
    }
    return list.truncated ? kInconclusive : kOk;
}

int cmd_indec(const std::string& file, const Options& opt) {
    const Presentation p = load(file);
    const Classification c = all_indecomposables(p, opt.cutoff);
    const bool complete = c.status == ClosureStatus::Complete;
    if (opt.json) {
        json j;
        j["status"] = complete ? "Complete" : "RepInfiniteSuspected";
        j["count"] = complete ? json(c.modules.size()) : json(nullptr);
        j["cutoff"] = opt.cutoff;
        if (complete) {
            json mods = json::array();
            for (const auto& m : c.modules) mods.push_back(json::parse(to_json(p.quiver(), m)));
            j["modules"] = mods;
        }
        emit(opt, j.dump(2) + "\n");
    } else {
        emit(opt, (complete ? std::to_string(c.modules.size()) : std::string("RepInfiniteSuspected")) + "\n");
    }
    return complete ? kOk : kInconclusive;
}

std::optional<ARQuiver> ar_or_report(const Presentation& p, const Options& opt) {
    const Classification c = all_indecomposables(p, opt.cutoff);
    if (c.status != ClosureStatus::Complete) {
        std::cerr << "RepInfiniteSuspected: closure exceeded " << opt.cutoff << " indecomposables or the module dimension cap\n";
        return std::nullopt;
    }
    return c.ar;
}

int cmd_ar(const std::string& file, const Options& opt) {
    const Presentation p = load(file);
    const auto ar = ar_or_report(p, opt);
    if (!ar) return kInconclusive;
    const std::string dot = to_dot(*ar);
    if (!opt.dot_path.empty()) {
        std::ofstream out(opt.dot_path);
        if (!out) throw IoError("cannot write '" + opt.dot_path + "'");
        out << dot;
    }
    if (opt.json) {
        json j;
        json mods = json::array();
        for (const auto& m : ar->modules) mods.push_back(m.dims());
        j["dimension_vectors"] = mods;
        j["irr"] = ar->irr;
        json tau = json::array();
        for (const auto& t : ar->tau) tau.push_back(t ? json(*t + 1) : json(nullptr));
        j["tau"] = tau;
        j["projective"] = ar->projective;
        j["injective"] = ar->injective;
        j["directed"] = ar->directed;
        emit(opt, j.dump(2) + "\n");
    } else if (opt.dot_path.empty() || !opt.out_path.empty()) {
        emit(opt, dot);
    }
    return kOk;
}

int cmd_auslander(const std::string& file, const Options& opt) {
    const auto ar = ar_or_report(load(file), opt);
    if (!ar) return kInconclusive;
    return emit_presentation(auslander_presentation(*ar), opt);
}

std::pair<std::string, std::string> split_pair(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == s.size())
        throw IoError("--pair expects v:w, got '" + s + "'");
    return {s.substr(0, colon), s.substr(colon + 1)};
}

int cmd_glue(const std::string& file, const std::vector<std::string>& pairs, const std::vector<std::string>& deletions,
             const std::vector<std::string>& supplement, const Options& opt) {
    GluingSpec spec;
    for (const auto& s : pairs) spec.pairs.push_back(split_pair(s));
    spec.deletions = {deletions.begin(), deletions.end()};
    spec.supplement = {supplement.begin(), supplement.end()};
    return emit_presentation(gluing_algebra(load(file), spec), opt);
}

int cmd_quotient(const std::string& file, const std::vector<std::string>& relations,
                 const std::vector<std::string>& deletions, const Options& opt) {
    Presentation p = load(file);
    if (!relations.empty()) {
        std::string text = serialize(p);
        for (const auto& r : relations) text += "relation: " + r + "\n";
        p = parse_presentation(text);
    }
    if (!deletions.empty()) p = delete_vertices(p, {deletions.begin(), deletions.end()});
    return emit_presentation(p, opt);
}

int cmd_iso(const std::string& fa, const std::string& fb, const Options& opt) {
    const Presentation a = load(fa), b = load(fb);
    const Algebra aa(a, opt.truncate), bb(b, opt.truncate);
    const IsoResult r = find_iso(aa, bb);
    if (r.status == IsoStatus::Found && !verify_iso(aa, bb, *r.witness))
        throw Error(Errc::InvalidSpec, "witness failed verification");
    const char* status = r.status == IsoStatus::Found ? "isomorphic" : r.status == IsoStatus::None ? "none" : "inconclusive";
    if (opt.json) {
        json j;
        j["status"] = status;
        if (r.witness) {
            json vertices, arrows;
            for (int v = 0; v < a.quiver().vertex_count(); ++v)
                vertices[a.quiver().vertex(v)] = b.quiver().vertex(r.witness->vertices[static_cast<size_t>(v)]);
            for (int x = 0; x < a.quiver().arrow_count(); ++x)
                arrows[a.quiver().arrow(x).name] = {{"image", b.quiver().arrow(r.witness->arrows[static_cast<size_t>(x)]).name},
                                                    {"scalar", r.witness->scalars[static_cast<size_t>(x)].to_string()}};
            j["vertices"] = vertices;
            j["arrows"] = arrows;
        } else {
            j["reason"] = r.reason;
        }
        emit(opt, j.dump(2) + "\n");
    } else if (r.witness) {
        emit(opt, to_string(a.quiver(), b.quiver(), *r.witness));
    } else {
        emit(opt, std::string(status) + "\n");
        std::cerr << r.reason << "\n";
    }
    switch (r.status) {
        case IsoStatus::Found: return kOk;
        case IsoStatus::None: return kNegative;
        case IsoStatus::Inconclusive: break;
    }
    return kInconclusive;
}

int cmd_check(const std::string& target, int n, bool timing, const Options& opt) {
    const auto reports = run_checks(target, n);
    emit(opt, opt.json ? checks_to_json(reports) : checks_to_text(reports, timing));
    for (const auto& r : reports) {
        if (!r.pass) return kNegative;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound quiver algebras: strings, Auslander-Reiten quivers, Auslander algebras, gluing"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_option("--max-length", opt.max_length, "longest string or band searched")->check(CLI::NonNegativeNumber);
    app.add_option("--cutoff", opt.cutoff, "give up after this many indecomposables")->check(CLI::PositiveNumber);
    app.add_option("--truncate", opt.truncate, "highest path degree computed for bases")->check(CLI::NonNegativeNumber);
    app.add_option("--dot", opt.dot_path, "write the AR quiver as DOT to this path");
    app.add_option("-o", opt.out_path, "write the main output to this path");

    std::string file_a, file_b, target;
    int n = 0;
    bool timing = false;
    std::vector<std::string> pairs, deletions, supplement, relations;
    const std::string file_help = "quiver file, or builtin:<name>";

    auto* validate = app.add_subcommand("validate", "parse a quiver file and report its basic invariants");
    validate->add_option("file", file_a, file_help)->required();
    auto* strings = app.add_subcommand("strings", "canonical strings, one per line");
    strings->add_option("file", file_a, file_help)->required();
    auto* bands = app.add_subcommand("bands", "bands up to rotation and inversion");
    bands->add_option("file", file_a, file_help)->required();
    auto* indec = app.add_subcommand("indec", "count indecomposable modules");
    indec->add_option("file", file_a, file_help)->required();
    auto* ar = app.add_subcommand("ar", "Auslander-Reiten quiver as DOT");
    ar->add_option("file", file_a, file_help)->required();
    auto* aus = app.add_subcommand("auslander", "presentation of the Auslander algebra");
    aus->add_option("file", file_a, file_help)->required();
    auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two presentations");
    tensor_cmd->add_option("a", file_a, file_help)->required();
    tensor_cmd->add_option("b", file_b, file_help)->required();
    auto* envelope = app.add_subcommand("envelope", "enveloping algebra A (x) A^op");
    envelope->add_option("file", file_a, file_help)->required();
    auto* glue_cmd = app.add_subcommand("glue", "gluing algebra with deletions and supplement");
    glue_cmd->add_option("file", file_a, file_help)->required();
    glue_cmd->add_option("--pair", pairs, "identify w with v, written v:w");
    glue_cmd->add_option("--delete", deletions, "vertex to delete after gluing");
    glue_cmd->add_option("--supplement", supplement, "vertex whose crossing zero relations are dropped");
    auto* quotient_cmd = app.add_subcommand("quotient", "add relations or delete vertices");
    quotient_cmd->add_option("file", file_a, file_help)->required();
    quotient_cmd->add_option("--relation", relations, "extra relation in quiver file syntax");
    quotient_cmd->add_option("--delete", deletions, "vertex to delete");
    auto* iso = app.add_subcommand("iso", "isomorphism of two presentations");
    iso->add_option("a", file_a, file_help)->required();
    iso->add_option("b", file_b, file_help)->required();
    auto* check = app.add_subcommand("check-paper", "run the reproduction checks for a target");
    check->add_option("target", target, "a_n, d_n, sec5-1 or fig5-family")->required()->check(CLI::IsMember(check_targets()));
    check->add_option("--n", n, "family size for a_n and d_n");
    check->add_flag("--timing", timing, "append wall time to text reports");
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*validate) return cmd_validate(file_a, opt);
        if (*strings) return cmd_strings(file_a, opt);
        if (*bands) return cmd_bands(file_a, opt);
        if (*indec) return cmd_indec(file_a, opt);
        if (*ar) return cmd_ar(file_a, opt);
        if (*aus) return cmd_auslander(file_a, opt);
        if (*tensor_cmd) return emit_presentation(quiverlab::tensor(load(file_a), load(file_b)), opt);
        if (*envelope) return emit_presentation(enveloping(load(file_a)), opt);
        if (*glue_cmd) return cmd_glue(file_a, pairs, deletions, supplement, opt);
        if (*quotient_cmd) return cmd_quotient(file_a, relations, deletions, opt);
        if (*iso) return cmd_iso(file_a, file_b, opt);
        if (*check) {
            if ((target == "a_n" || target == "d_n") && n == 0) {
                std::cerr << "check-paper " << target << " needs --n\n";
                return kUsage;
            }
            return cmd_check(target, n, timing, opt);
        }
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kNegative;
    }
    return kUsage;
}
