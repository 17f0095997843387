#include "isgkit/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "isgkit/constructors.hpp"
#include "isgkit/error.hpp"

namespace isgkit {

namespace {

using json = nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string at(std::size_t r, std::size_t c)
{
    return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

std::uint32_t entry(const json& v, std::size_t size, const std::string& where)
{
    if (!v.is_number_unsigned())
        throw InputError("expected a non-negative integer at " + where);
    const auto value = v.get<std::uint64_t>();
    if (value >= size)
        throw InputError("index out of range at " + where);
    return static_cast<std::uint32_t>(value);
}

const json& field(const json& doc, const char* key)
{
    auto it = doc.find(key);
    if (it == doc.end())
        throw InputError(std::string("missing field '") + key + "'");
    return *it;
}

// ---- reports ------------------------------------------------------------------

ordered element_ref(const InverseSemigroup& s, ElementId e)
{
    ordered o;
    o["id"] = index(e);
    o["label"] = s.label(e);
    return o;
}

ordered optional_ref(const InverseSemigroup& s, const std::optional<ElementId>& e)
{
    return e ? element_ref(s, *e) : ordered(nullptr);
}

ordered witness_json(const InverseSemigroup& s, const Witness& w)
{
    ordered o;
    o["clause"] = to_string(w.clause);
    if (!w.semigroup.empty())
        o["semigroup"] = w.semigroup;
    if (w.s)
        o["s"] = element_ref(s, *w.s);
    if (w.x)
        o["x"] = element_ref(s, *w.x);
    if (w.y)
        o["y"] = element_ref(s, *w.y);
    if (w.member)
        o["member"] = element_ref(s, *w.member);
    if (w.subset) {
        ordered members = ordered::array();
        for (ElementId e : *w.subset)
            members.push_back(element_ref(s, e));
        o["subset"] = std::move(members);
    }
    o["lhs"] = optional_ref(s, w.lhs);
    o["rhs"] = optional_ref(s, w.rhs);
    return o;
}

ordered budget_json(const SubsetBudget& b)
{
    ordered o;
    o["mode"] = to_string(b.mode);
    o["max_subset_size"] = b.max_subset_size;
    o["sample_count"] = b.sample_count;
    o["seed"] = b.seed;
    o["include_empty_set"] = b.include_empty_set;
    o["subset_ceiling"] = b.subset_ceiling;
    return o;
}

ElementId parse_ref(const json& v, const InverseSemigroup& s)
{
    const ElementId e = element(entry(field(v, "id"), s.size(), "witness element"));
    if (auto label = v.find("label"); label != v.end() && label->get<std::string>() != s.label(e))
        throw InputError("witness label '" + label->get<std::string>() + "' does not match element " +
                         std::to_string(index(e)));
    return e;
}

std::optional<ElementId> parse_optional_ref(const json& doc, const char* key, const InverseSemigroup& s)
{
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null())
        return std::nullopt;
    return parse_ref(*it, s);
}

Witness parse_witness(const json& doc, const InverseSemigroup& s)
{
    Witness w;
    auto clause = parse_clause(field(doc, "clause").get<std::string>());
    if (!clause)
        throw InputError("unknown witness clause");
    w.clause = *clause;
    if (auto it = doc.find("semigroup"); it != doc.end())
        w.semigroup = it->get<std::string>();
    w.s = parse_optional_ref(doc, "s", s);
    w.x = parse_optional_ref(doc, "x", s);
    w.y = parse_optional_ref(doc, "y", s);
    w.member = parse_optional_ref(doc, "member", s);
    if (auto it = doc.find("subset"); it != doc.end()) {
        ElementSet subset(s.size());
        for (const auto& v : *it)
            subset.insert(parse_ref(v, s));
        w.subset = std::move(subset);
    }
    w.lhs = parse_optional_ref(doc, "lhs", s);
    w.rhs = parse_optional_ref(doc, "rhs", s);
    return w;
}

Verdict parse_verdict_field(const json& v)
{
    auto verdict = parse_verdict(v.get<std::string>());
    if (!verdict)
        throw InputError("unknown verdict '" + v.get<std::string>() + "'");
    return *verdict;
}

}  // namespace

SemigroupFile parse_semigroup(std::string_view bytes)
{
    json doc;
    try {
        doc = json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed semigroup file: ") + e.what());
    }
    if (!doc.is_object())
        throw InputError("semigroup file must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "format_version" && key != "size" && key != "product" && key != "inverse" &&
            key != "labels" && key != "metadata")
            throw InputError("unknown field '" + key + "'");

    const json& version = field(doc, "format_version");
    if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
        throw InputError("unsupported format_version (expected " + std::to_string(kFormatVersion) + ")");

    const json& size_field = field(doc, "size");
    if (!size_field.is_number_unsigned() || size_field.get<std::uint64_t>() == 0)
        throw InputError("size must be a positive integer");
    const auto size = static_cast<std::size_t>(size_field.get<std::uint64_t>());

    const json& rows = field(doc, "product");
    if (!rows.is_array() || rows.size() != size)
        throw InputError("product must be an array of " + std::to_string(size) + " rows");
    std::vector<std::uint32_t> product;
    product.reserve(size * size);
    for (std::size_t r = 0; r < size; ++r) {
        if (!rows[r].is_array() || rows[r].size() != size)
            throw InputError("product row " + std::to_string(r) + " must have " + std::to_string(size) +
                             " entries");
        for (std::size_t c = 0; c < size; ++c)
            product.push_back(entry(rows[r][c], size, at(r, c)));
    }

    std::optional<std::vector<std::uint32_t>> inverse;
    if (auto it = doc.find("inverse"); it != doc.end()) {
        if (!it->is_array() || it->size() != size)
            throw InputError("inverse must be an array of " + std::to_string(size) + " entries");
        inverse.emplace();
        for (std::size_t i = 0; i < size; ++i)
            inverse->push_back(entry((*it)[i], size, "inverse (" + std::to_string(i) + ")"));
    }

    std::vector<std::string> labels;
    if (auto it = doc.find("labels"); it != doc.end()) {
        if (!it->is_array())
            throw InputError("labels must be an array of strings");
        for (const auto& v : *it) {
            if (!v.is_string())
                throw InputError("labels must be an array of strings");
            labels.push_back(v.get<std::string>());
        }
    }

    Metadata metadata;
    if (auto it = doc.find("metadata"); it != doc.end()) {
        if (!it->is_object())
            throw InputError("metadata must be an object");
        for (const auto& [key, value] : it->items()) {
            if (!value.is_string())
                throw InputError("metadata value for '" + key + "' must be a string");
            metadata.emplace(key, value.get<std::string>());
        }
    }

    return SemigroupFile{from_cayley_table(size, std::move(product), std::move(inverse), std::move(labels)),
                         std::move(metadata)};
}

std::string emit_semigroup(const InverseSemigroup& s, const Metadata& metadata)
{
    const std::size_t n = s.size();
    std::ostringstream out;
    out << "{\n";
    out << "  \"format_version\": " << kFormatVersion << ",\n";
    out << "  \"size\": " << n << ",\n";
    out << "  \"product\": [\n";
    const auto table = s.product_table();
    for (std::size_t r = 0; r < n; ++r) {
        out << "    [";
        for (std::size_t c = 0; c < n; ++c)
            out << (c == 0 ? "" : ", ") << table[r * n + c];
        out << "]" << (r + 1 < n ? "," : "") << "\n";
    }
    out << "  ],\n";
    out << "  \"inverse\": [";
    for (std::size_t i = 0; i < n; ++i)
        out << (i == 0 ? "" : ", ") << s.inverse_table()[i];
    out << "]";
    if (s.has_labels()) {
        out << ",\n  \"labels\": [";
        for (std::size_t i = 0; i < n; ++i)
            out << (i == 0 ? "" : ", ") << quoted(s.labels()[i]);
        out << "]";
    }
    if (!metadata.empty()) {
        out << ",\n  \"metadata\": {\n";
        std::size_t k = 0;
        for (const auto& [key, value] : metadata)
            out << "    " << quoted(key) << ": " << quoted(value) << (++k < metadata.size() ? "," : "") << "\n";
        out << "  }";
    }
    out << "\n}\n";
    return out.str();
}

std::string content_digest(std::string_view bytes)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out = "sha256:";
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 0xF];
    }
    return out;
}

std::string input_digest(const SemigroupFile& file)
{
    return content_digest(emit_semigroup(file.semigroup, file.metadata));
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, std::string_view bytes)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw InputError("short write to '" + path + "'");
}

SemigroupFile load_semigroup(std::string_view input)
{
    constexpr std::string_view scheme = "builtin:";
    if (input.starts_with(scheme))
        return SemigroupFile{builtin(input.substr(scheme.size())), {{"source", std::string(input)}}};
    return parse_semigroup(read_file(std::string(input)));
}

std::string emit_report(const ReportFile& file, const InverseSemigroup& s)
{
    const LawReport& r = file.report;
    ordered o;
    o["format_version"] = kFormatVersion;
    o["law"] = to_string(r.law);
    o["verdict"] = to_string(r.verdict);
    if (r.hypothesis)
        o["hypothesis"] = to_string(*r.hypothesis);
    o["cases_checked"] = r.cases_checked;
    o["cases_applicable"] = r.cases_applicable;
    o["empty_set_cases"] = r.empty_set_cases;
    o["failures"] = r.failures;
    if (r.budget)
        o["budget"] = budget_json(*r.budget);
    if (r.law == Law::theorem)
        o["families"] = "subsets; repeated members are dropped";
    o["witness"] = r.witness ? witness_json(s, *r.witness) : ordered(nullptr);
    if (r.mirror) {
        ordered m;
        m["side"] = "right";
        m["verdict"] = to_string(r.mirror->verdict);
        m["failures"] = r.mirror->failures;
        m["witness"] = r.mirror->witness ? witness_json(s, *r.mirror->witness) : ordered(nullptr);
        o["mirror"] = std::move(m);
    }
    if (!r.corpus.empty()) {
        ordered corpus = ordered::array();
        for (const auto& entry : r.corpus) {
            ordered c;
            c["name"] = entry.name;
            c["idempotents"] = to_string(entry.idempotents);
            c["semigroup"] = to_string(entry.semigroup);
            corpus.push_back(std::move(c));
        }
        o["corpus"] = std::move(corpus);
    }
    o["tool_version"] = file.tool_version;
    o["input_digest"] = file.input_digest;
    return o.dump(2) + "\n";
}

ReportFile parse_report(std::string_view bytes, const InverseSemigroup& s)
{
    json doc;
    try {
        doc = json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    }
    try {
        ReportFile file;
        LawReport& r = file.report;
        auto law = parse_law(field(doc, "law").get<std::string>());
        if (!law)
            throw InputError("unknown law in report");
        r.law = *law;
        r.verdict = parse_verdict_field(field(doc, "verdict"));
        if (auto it = doc.find("hypothesis"); it != doc.end())
            r.hypothesis = parse_verdict_field(*it);
        r.cases_checked = field(doc, "cases_checked").get<std::uint64_t>();
        r.cases_applicable = field(doc, "cases_applicable").get<std::uint64_t>();
        r.empty_set_cases = field(doc, "empty_set_cases").get<std::uint64_t>();
        r.failures = field(doc, "failures").get<std::uint64_t>();
        if (auto it = doc.find("budget"); it != doc.end()) {
            SubsetBudget b;
            b.mode = field(*it, "mode").get<std::string>() == "exhaustive" ? SubsetBudget::Mode::exhaustive
                                                                            : SubsetBudget::Mode::bounded;
            b.max_subset_size = field(*it, "max_subset_size").get<std::size_t>();
            b.sample_count = field(*it, "sample_count").get<std::size_t>();
            b.seed = field(*it, "seed").get<std::uint64_t>();
            b.include_empty_set = field(*it, "include_empty_set").get<bool>();
            b.subset_ceiling = field(*it, "subset_ceiling").get<std::uint64_t>();
            r.budget = b;
        }
        if (const json& w = field(doc, "witness"); !w.is_null())
            r.witness = parse_witness(w, s);
        if (auto it = doc.find("mirror"); it != doc.end()) {
            SideReport side;
            side.verdict = parse_verdict_field(field(*it, "verdict"));
            side.failures = field(*it, "failures").get<std::uint64_t>();
            if (const json& w = field(*it, "witness"); !w.is_null())
                side.witness = parse_witness(w, s);
            r.mirror = std::move(side);
        }
        if (auto it = doc.find("corpus"); it != doc.end())
            for (const auto& c : *it)
                r.corpus.push_back(CorpusEntry{field(c, "name").get<std::string>(),
                                               parse_verdict_field(field(c, "idempotents")),
                                               parse_verdict_field(field(c, "semigroup"))});
        file.tool_version = field(doc, "tool_version").get<std::string>();
        file.input_digest = field(doc, "input_digest").get<std::string>();
        return file;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    }
}

}  // namespace isgkit
