#include "cli.hpp"

#include <filesystem>
#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "isgkit/constructors.hpp"
#include "isgkit/error.hpp"
#include "isgkit/io.hpp"
#include "isgkit/order.hpp"
#include "isgkit/version.hpp"

namespace isgkit::cli {

namespace {

const std::vector<std::string> kLawChoices{"distributive", "lemma1", "lemma2", "theorem", "prop17", "prop20"};
const std::vector<std::string> kFamilyChoices{"symmetric-inverse", "semilattice", "cyclic-group",
                                              "brandt",            "adjoin-zero", "builtin"};

struct CheckOptions
{
    std::string input;
    std::string law;
    bool exhaustive = false;
    std::size_t max_subset_size = 3;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    bool include_empty_set = true;
    std::string out_path;
    bool sidecar = false;
};

struct GenOptions
{
    std::string family;
    std::optional<std::size_t> n;
    std::optional<std::string> name;
    std::optional<std::string> table_path;
    std::optional<std::string> inner;
    std::string out_path;
};

struct InfoOptions
{
    std::string input;
    bool json = false;
};

struct ReplayOptions
{
    std::string report_path;
    std::string input;
};

std::string sidecar_path(const std::string& input, Law law)
{
    return input + "." + to_string(law) + ".report.json";
}

int exit_code(Verdict v)
{
    switch (v) {
        case Verdict::holds:
        case Verdict::holds_within_budget:
            return kHolds;
        case Verdict::fails:
            return kFails;
        case Verdict::hypothesis_not_established:
            return kHypothesisNotEstablished;
    }
    return kUsage;
}

int run_check(const CheckOptions& opt, std::ostream& out, std::ostream& err)
{
    const Law law = *parse_law(opt.law);
    SubsetBudget budget;
    budget.mode = opt.exhaustive ? SubsetBudget::Mode::exhaustive : SubsetBudget::Mode::bounded;
    budget.max_subset_size = opt.max_subset_size;
    budget.sample_count = opt.samples;
    budget.seed = opt.seed;
    budget.include_empty_set = opt.include_empty_set;
    budget.subset_ceiling = subset_ceiling_from_env();

    const SemigroupFile file = load_semigroup(opt.input);
    const NaturalOrder order(file.semigroup);
    ReportFile report{check_law(law, file.semigroup, order, budget, opt.input), kToolVersion,
                      input_digest(file)};
    const std::string text = emit_report(report, file.semigroup);

    if (!opt.out_path.empty())
        write_file(opt.out_path, text);
    if (opt.sidecar)
        write_file(sidecar_path(opt.input, law), text);
    if (opt.out_path.empty())
        out << text;

    err << to_string(law) << ": " << to_string(report.report.verdict) << " (" << report.report.cases_checked
        << " cases, " << report.report.failures << " failures)\n";
    return exit_code(report.report.verdict);
}

int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err)
{
    FamilySpec spec;
    spec.family = *parse_family(opt.family);
    spec.n = opt.n;
    spec.name = opt.name;
    std::string source = opt.family;
    if (opt.n)
        source += ":n=" + std::to_string(*opt.n);
    if (opt.name)
        source = (spec.family == FamilySpec::Family::builtin ? "builtin:" : opt.family + ":name=") + *opt.name;
    if (opt.table_path) {
        const auto doc = nlohmann::json::parse(read_file(*opt.table_path), nullptr, false);
        if (doc.is_discarded() || !doc.is_array())
            throw InputError("meet table file must hold a JSON array of rows");
        std::vector<std::uint32_t> table;
        for (const auto& row : doc) {
            if (!row.is_array() || row.size() != doc.size())
                throw InputError("meet table must be square");
            for (const auto& v : row) {
                if (!v.is_number_unsigned())
                    throw InputError("meet table entries must be non-negative integers");
                table.push_back(v.get<std::uint32_t>());
            }
        }
        spec.table = std::move(table);
        spec.table_size = doc.size();
        source += ":table";
    }
    Metadata inner_meta;
    if (opt.inner) {
        SemigroupFile inner = load_semigroup(*opt.inner);
        auto it = inner.metadata.find("source");
        source += ":" + (it != inner.metadata.end() ? it->second : *opt.inner);
        spec.inner = std::make_shared<const InverseSemigroup>(std::move(inner.semigroup));
    }

    const InverseSemigroup s = build(spec);
    const std::string text = emit_semigroup(s, {{"source", source}});
    const std::string summary =
        source + ": size " + std::to_string(s.size()) + ", idempotents " + std::to_string(idempotents(s).count());
    if (opt.out_path.empty()) {
        out << text;
        err << summary << "\n";
    } else {
        write_file(opt.out_path, text);
        out << "wrote " << opt.out_path << " (" << summary << ")\n";
    }
    return kHolds;
}

std::optional<ElementId> zero_of(const InverseSemigroup& s)
{
    for (ElementId z : s.elements()) {
        bool absorbing = true;
        for (ElementId a : s.elements())
            if (s.product(z, a) != z || s.product(a, z) != z) {
                absorbing = false;
                break;
            }
        if (absorbing)
            return z;
    }
    return std::nullopt;
}

int run_info(const InfoOptions& opt, std::ostream& out)
{
    const SemigroupFile file = load_semigroup(opt.input);
    const InverseSemigroup& s = file.semigroup;
    const NaturalOrder order(s);
    const auto zero = zero_of(s);
    const std::size_t comparable = order.comparable_pairs();
    const std::string digest = input_digest(file);

    nlohmann::ordered_json cached = nlohmann::ordered_json::object();
    for (const auto& name : kLawChoices) {
        const Law law = *parse_law(name);
        const std::string path = sidecar_path(opt.input, law);
        if (!std::filesystem::exists(path))
            continue;
        try {
            const ReportFile r = parse_report(read_file(path), s);
            cached[name] = r.input_digest == digest ? to_string(r.report.verdict) : "stale (digest mismatch)";
        } catch (const std::exception&) {
            cached[name] = "unreadable";
        }
    }

    if (opt.json) {
        nlohmann::ordered_json o;
        o["size"] = s.size();
        o["idempotents"] = idempotents(s).count();
        o["has_zero"] = zero.has_value();
        o["zero"] = zero ? nlohmann::ordered_json(s.label(*zero)) : nlohmann::ordered_json(nullptr);
        o["has_minimum"] = order.minimum().has_value();
        o["comparable_pairs"] = comparable;
        o["strict_comparable_pairs"] = comparable - s.size();
        o["cached_verdicts"] = cached;
        o["input_digest"] = digest;
        out << o.dump(2) << "\n";
        return kHolds;
    }
    out << "size: " << s.size() << "\n";
    out << "idempotents: " << idempotents(s).count() << "\n";
    out << "has zero: " << (zero ? "yes (" + s.label(*zero) + ")" : std::string("no")) << "\n";
    out << "has minimum: " << (order.minimum() ? "yes" : "no") << "\n";
    out << "comparable pairs: " << comparable << " (" << comparable - s.size() << " strict)\n";
    out << "input digest: " << digest << "\n";
    if (cached.empty())
        out << "cached verdicts: none\n";
    for (const auto& [law, verdict] : cached.items())
        out << "cached " << law << ": " << verdict.get<std::string>() << "\n";
    return kHolds;
}

int run_replay(const ReplayOptions& opt, std::ostream& out, std::ostream& err)
{
    const SemigroupFile file = load_semigroup(opt.input);
    const ReportFile report = parse_report(read_file(opt.report_path), file.semigroup);
    if (report.input_digest != input_digest(file)) {
        err << "error: report digest " << report.input_digest << " does not match input " << input_digest(file)
            << "\n";
        return kUsage;
    }
    const NaturalOrder order(file.semigroup);
    bool ok = true;
    auto check = [&](const char* what, const std::optional<Witness>& w) {
        if (!w)
            return;
        const bool reproduced = replay(file.semigroup, order, *w);
        out << what << " witness (" << to_string(w->clause) << "): " << (reproduced ? "reproduced" : "NOT reproduced")
            << "\n";
        ok = ok && reproduced;
    };
    check("primary", report.report.witness);
    if (report.report.mirror)
        check("mirror", report.report.mirror->witness);
    if (!report.report.witness && !(report.report.mirror && report.report.mirror->witness))
        out << "no witness to replay\n";
    return ok ? kHolds : kFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite inverse semigroups: natural order, joins, meets and law checks", "isgkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Check a law and emit a JSON report");
    check_cmd->add_option("input", check.input, "Semigroup file or builtin:<name>")->required();
    check_cmd->add_option("--law", check.law, "Law to check")->required()->check(CLI::IsMember(kLawChoices));
    check_cmd->add_flag("--exhaustive", check.exhaustive, "Enumerate every subset");
    check_cmd->add_option("--max-subset-size", check.max_subset_size, "Bounded mode: largest exhaustive size")
        ->check(CLI::NonNegativeNumber);
    check_cmd->add_option("--samples", check.samples, "Bounded mode: random larger subsets");
    check_cmd->add_option("--seed", check.seed, "Sampling seed");
    check_cmd->add_option("--include-empty-set", check.include_empty_set, "Include the empty subset (true/false)");
    check_cmd->add_option("--out", check.out_path, "Write the report here instead of stdout");
    check_cmd->add_flag("--sidecar", check.sidecar, "Also write <input>.<law>.report.json");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a semigroup file");
    gen_cmd->add_option("--family", gen.family, "Family")->required()->check(CLI::IsMember(kFamilyChoices));
    gen_cmd->add_option("--n", gen.n, "Size parameter");
    gen_cmd->add_option("--name", gen.name, "Builtin fixture name");
    gen_cmd->add_option("--table", gen.table_path, "JSON file with a square meet table");
    gen_cmd->add_option("--inner", gen.inner, "Inner semigroup for adjoin-zero");
    gen_cmd->add_option("--out", gen.out_path, "Output path (default stdout)");

    InfoOptions info;
    auto* info_cmd = app.add_subcommand("info", "Summarize a semigroup");
    info_cmd->add_option("input", info.input, "Semigroup file or builtin:<name>")->required();
    info_cmd->add_flag("--json", info.json, "Structured output");

    ReplayOptions rep;
    auto* replay_cmd = app.add_subcommand("replay", "Re-evaluate the witnesses of a report");
    replay_cmd->add_option("report", rep.report_path, "Report file")->required();
    replay_cmd->add_option("--input", rep.input, "Semigroup the report was produced from")->required();

    std::vector<std::string> argv_storage{"isgkit"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*check_cmd)
            return run_check(check, out, err);
        if (*gen_cmd)
            return run_gen(gen, out, err);
        if (*info_cmd)
            return run_info(info, out);
        if (*replay_cmd)
            return run_replay(rep, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const AxiomError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
    }
    return kUsage;
}

}  // namespace isgkit::cli
