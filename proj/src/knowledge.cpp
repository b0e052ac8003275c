#include "bullwhip/knowledge.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace bullwhip {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::unordered_map<std::string, int> term_frequencies(const std::vector<std::string>& tokens) {
    std::unordered_map<std::string, int> tf;
    for (const auto& t : tokens) ++tf[t];
    return tf;
}

// parameters: {'extra_lead_time': 4, 'transport_cost_premium': 75}
std::map<std::string, std::int64_t> parse_parameter_map(const std::string& body, int line_no) {
    const std::string s = trim(body);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw KbParseError(line_no, "parameter map must be brace-delimited");
    std::map<std::string, std::int64_t> out;
    std::string inner = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos < inner.size()) {
        while (pos < inner.size() && (std::isspace(static_cast<unsigned char>(inner[pos])) ||
                                      inner[pos] == ','))
            ++pos;
        if (pos >= inner.size()) break;
        if (inner[pos] != '\'')
            throw KbParseError(line_no, "parameter keys must be single-quoted");
        const std::size_t key_end = inner.find('\'', pos + 1);
        if (key_end == std::string::npos)
            throw KbParseError(line_no, "unterminated parameter key");
        const std::string key = inner.substr(pos + 1, key_end - pos - 1);
        pos = key_end + 1;
        while (pos < inner.size() && std::isspace(static_cast<unsigned char>(inner[pos]))) ++pos;
        if (pos >= inner.size() || inner[pos] != ':')
            throw KbParseError(line_no, "expected ':' after parameter key");
        ++pos;
        while (pos < inner.size() && std::isspace(static_cast<unsigned char>(inner[pos]))) ++pos;
        std::size_t num_end = pos;
        if (num_end < inner.size() && (inner[num_end] == '-' || inner[num_end] == '+')) ++num_end;
        while (num_end < inner.size() && std::isdigit(static_cast<unsigned char>(inner[num_end])))
            ++num_end;
        if (num_end == pos)
            throw KbParseError(line_no, "expected integer value for key '" + key + "'");
        try {
            out[key] = std::stoll(inner.substr(pos, num_end - pos));
        } catch (const std::out_of_range&) {
            throw KbParseError(line_no, "value out of range for key '" + key + "'");
        }
        pos = num_end;
        while (pos < inner.size() && std::isspace(static_cast<unsigned char>(inner[pos]))) ++pos;
        if (pos < inner.size() && inner[pos] != ',')
            throw KbParseError(line_no, "expected ',' between parameters");
    }
    return out;
}

}  // namespace

std::string_view to_string(DocKind k) {
    return k == DocKind::Policy ? "POLICY" : "STRATEGY";
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : text) {
        const unsigned char c = static_cast<unsigned char>(ch);
        if (std::isalnum(c)) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

double similarity(const std::vector<std::string>& query_tokens,
                  const std::vector<std::string>& doc_tokens) {
    if (query_tokens.empty() || doc_tokens.empty()) return 0.0;
    const auto qf = term_frequencies(query_tokens);
    const auto df = term_frequencies(doc_tokens);
    double dot = 0.0;
    for (const auto& [term, qcount] : qf) {
        auto it = df.find(term);
        if (it != df.end()) dot += static_cast<double>(qcount) * it->second;
    }
    double qnorm = 0.0, dnorm = 0.0;
    for (const auto& [term, c] : qf) qnorm += static_cast<double>(c) * c;
    for (const auto& [term, c] : df) dnorm += static_cast<double>(c) * c;
    return dot / (std::sqrt(qnorm) * std::sqrt(dnorm));
}

void KnowledgeBase::rebuild_index() {
    doc_tokens_.clear();
    doc_tokens_.reserve(docs_.size());
    for (const auto& d : docs_) {
        std::string haystack = d.name;
        haystack += ' ';
        haystack += d.description;
        if (d.entity) {
            haystack += ' ';
            haystack += to_string(*d.entity);
        }
        doc_tokens_.push_back(tokenize(haystack));
    }
}

KnowledgeBase KnowledgeBase::parse(std::string_view text) {
    KnowledgeBase kb;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    KnowledgeDocument* current = nullptr;
    bool in_description = false;

    auto finish_current = [&]() { current = nullptr; };

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty()) {
            in_description = false;
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']')
                throw KbParseError(line_no, "document header missing closing bracket");
            const std::string header = line.substr(1, line.size() - 2);
            const std::size_t colon = header.find(':');
            if (colon == std::string::npos)
                throw KbParseError(line_no, "document header must be [KIND: NAME]");
            const std::string kind_str = trim(header.substr(0, colon));
            const std::string name = trim(header.substr(colon + 1));
            DocKind kind;
            if (kind_str == "POLICY")
                kind = DocKind::Policy;
            else if (kind_str == "STRATEGY")
                kind = DocKind::Strategy;
            else
                throw KbParseError(line_no, "unknown document kind '" + kind_str + "'");
            if (name.empty()) throw KbParseError(line_no, "document name is empty");
            for (const auto& d : kb.docs_)
                if (d.name == name)
                    throw KbParseError(line_no, "duplicate document name '" + name + "'");
            finish_current();
            kb.docs_.push_back(KnowledgeDocument{kind, name, "", std::nullopt, {}});
            current = &kb.docs_.back();
            in_description = false;
            continue;
        }
        if (!current) throw KbParseError(line_no, "content outside any document block");

        const std::size_t colon = line.find(':');
        const std::string key = colon == std::string::npos ? "" : trim(line.substr(0, colon));
        const bool looks_like_key =
            colon != std::string::npos && !key.empty() &&
            std::all_of(key.begin(), key.end(), [](unsigned char c) {
                return std::isalnum(c) || c == '_';
            });

        if (!looks_like_key) {
            // Continuation of a wrapped description.
            if (!in_description)
                throw KbParseError(line_no, "expected 'key: value' line");
            current->description += ' ';
            current->description += line;
            continue;
        }

        const std::string value = trim(line.substr(colon + 1));
        in_description = false;
        if (key == "description") {
            current->description = value;
            in_description = true;
        } else if (key == "entity") {
            const auto role = role_from_string(value);
            if (!role) throw KbParseError(line_no, "unknown entity '" + value + "'");
            current->entity = role;
        } else if (key == "parameters") {
            current->parameters = parse_parameter_map(value, line_no);
        } else {
            // Bare numeric fields (order_up_to_level and friends).
            try {
                std::size_t used = 0;
                const std::int64_t num = std::stoll(value, &used);
                if (used != value.size()) throw std::invalid_argument("trailing");
                current->parameters[key] = num;
            } catch (const std::exception&) {
                throw KbParseError(line_no, "expected integer value for '" + key + "'");
            }
        }
    }
    kb.rebuild_index();
    return kb;
}

KnowledgeBase KnowledgeBase::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open knowledge base file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const KnowledgeDocument& KnowledgeBase::retrieve(std::string_view query,
                                                 std::optional<DocKind> kind_filter) const {
    const auto query_tokens = tokenize(query);
    const KnowledgeDocument* best = nullptr;
    double best_score = 0.0;
    for (std::size_t i = 0; i < docs_.size(); ++i) {
        if (kind_filter && docs_[i].kind != *kind_filter) continue;
        const double score = similarity(query_tokens, doc_tokens_[i]);
        if (score <= 0.0) continue;
        if (!best || score > best_score ||
            (score == best_score && docs_[i].name < best->name)) {
            best = &docs_[i];
            best_score = score;
        }
    }
    if (!best) throw NoMatchError("no document matches query: " + std::string(query));
    return *best;
}

std::vector<KnowledgeDocument> KnowledgeBase::retrieve_portfolio(std::string_view query) const {
    const auto query_tokens = tokenize(query);
    std::vector<std::pair<double, const KnowledgeDocument*>> scored;
    for (std::size_t i = 0; i < docs_.size(); ++i) {
        if (docs_[i].kind != DocKind::Strategy) continue;
        scored.emplace_back(similarity(query_tokens, doc_tokens_[i]), &docs_[i]);
    }
    if (scored.empty()) throw NoMatchError("knowledge base holds no strategy documents");
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second->name < b.second->name;
    });
    std::vector<KnowledgeDocument> out;
    out.reserve(scored.size());
    for (const auto& [score, doc] : scored) out.push_back(*doc);
    return out;
}

const KnowledgeDocument* KnowledgeBase::find(std::string_view name) const {
    for (const auto& d : docs_)
        if (d.name == name) return &d;
    return nullptr;
}

std::string KnowledgeBase::serialize() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& d : docs_) {
        if (!first) os << '\n';
        first = false;
        os << '[' << to_string(d.kind) << ": " << d.name << "]\n";
        os << "description: " << d.description << '\n';
        if (d.entity) {
            std::string role(to_string(*d.entity));
            role[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(role[0])));
            os << "entity: " << role << '\n';
        }
        if (d.kind == DocKind::Strategy) {
            os << "parameters: {";
            bool first_param = true;
            for (const auto& [k, v] : d.parameters) {
                if (!first_param) os << ", ";
                first_param = false;
                os << '\'' << k << "': " << v;
            }
            os << "}\n";
        } else {
            for (const auto& [k, v] : d.parameters) os << k << ": " << v << '\n';
        }
    }
    return os.str();
}

StrategyParameters extract_parameters(const KnowledgeDocument& doc) {
    if (doc.kind != DocKind::Strategy)
        throw KindError("extract_parameters: document '" + doc.name + "' is not a strategy");
    StrategyParameters p;
    if (auto it = doc.parameters.find("extra_lead_time"); it != doc.parameters.end())
        p.extra_lead_time = static_cast<int>(it->second);
    if (auto it = doc.parameters.find("transport_cost_premium"); it != doc.parameters.end())
        p.transport_cost_premium = static_cast<double>(it->second);
    return p;
}

}  // namespace bullwhip
