#include "mopareto/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mopareto/errors.hpp"

namespace mopareto {

namespace {

using json = nlohmann::ordered_json;

json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const json& require(const json& obj, const char* key) {
    if (!obj.is_object()) throw ParseError("expected a JSON object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

Rational rational_field(const json& value) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(mpq_class(value.dump()));
    throw ParseError("expected a rational string, got " + value.dump());
}

std::string string_field(const json& value, const char* what) {
    if (!value.is_string()) throw ParseError(std::string(what) + " must be a string");
    return value.get<std::string>();
}

int int_field(const json& value, const char* what) {
    if (!value.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return value.get<int>();
}

}  // namespace

Instance load_instance(std::string_view json_text) {
    const json doc = parse_document(json_text);
    const int p = int_field(require(doc, "p"), "p");
    if (p < 1) throw InstanceError("p must be at least 1");
    const json& list = require(doc, "solutions");
    if (!list.is_array()) throw ParseError("'solutions' must be an array");

    std::vector<Solution> solutions;
    solutions.reserve(list.size());
    for (const auto& entry : list) {
        Solution s;
        s.id = string_field(require(entry, "id"), "id");
        const json& f = require(entry, "f");
        if (!f.is_array()) throw ParseError("'f' of '" + s.id + "' must be an array");
        s.f.reserve(f.size());
        for (const auto& v : f) s.f.push_back(rational_field(v));
        solutions.push_back(std::move(s));
    }
    return Instance(static_cast<std::size_t>(p), std::move(solutions));
}

std::string save_instance(const Instance& instance) {
    json doc;
    doc["p"] = instance.p();
    json list = json::array();
    for (const auto& s : instance.solutions()) {
        json f = json::array();
        for (const auto& v : s.f) f.push_back(v.str());
        list.push_back(json{{"id", s.id}, {"f", std::move(f)}});
    }
    doc["solutions"] = std::move(list);
    return doc.dump(2) + "\n";
}

ApproximationSet load_set(std::string_view json_text) {
    const json doc = parse_document(json_text);
    ApproximationSet set;

    const json& rel = require(doc, "relation");
    set.relation.kind = parse_relation_kind(string_field(require(rel, "kind"), "relation kind"));
    set.relation.eps = rational_field(require(rel, "eps"));
    if (const auto it = rel.find("k"); it != rel.end() && !it->is_null()) set.relation.k = int_field(*it, "k");

    const json& members = require(doc, "members");
    if (!members.is_array()) throw ParseError("'members' must be an array");
    for (const auto& m : members) set.members.push_back(string_field(m, "member id"));

    if (const auto it = doc.find("certificate"); it != doc.end()) {
        if (!it->is_array()) throw ParseError("'certificate' must be an array");
        for (const auto& e : *it) {
            CoverEntry entry;
            entry.covered = string_field(require(e, "covered"), "covered");
            entry.by = string_field(require(e, "by"), "by");
            const json& idx = require(e, "exact_indices");
            if (!idx.is_array()) throw ParseError("'exact_indices' must be an array");
            for (const auto& i : idx) entry.exact_indices.push_back(int_field(i, "exact index"));
            set.certificate.push_back(std::move(entry));
        }
    }
    return set;
}

std::string save_set(const ApproximationSet& set) {
    json rel;
    rel["kind"] = std::string(to_string(set.relation.kind));
    rel["eps"] = set.relation.eps.str();
    if (set.relation.k) rel["k"] = *set.relation.k;

    json doc;
    doc["relation"] = std::move(rel);
    doc["members"] = set.members;
    json cert = json::array();
    for (const auto& e : set.certificate) {
        cert.push_back(json{{"covered", e.covered}, {"by", e.by}, {"exact_indices", e.exact_indices}});
    }
    doc["certificate"] = std::move(cert);
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw std::runtime_error("short write to '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace mopareto
