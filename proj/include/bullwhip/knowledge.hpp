#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bullwhip/types.hpp"

namespace bullwhip {

/// Raised on malformed knowledge-base text; carries the offending line.
struct KbParseError : std::runtime_error {
    int line;
    KbParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// Raised when no document scores above zero for a query.
struct NoMatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an operation is applied to the wrong document kind.
struct KindError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DocKind { Policy, Strategy };

std::string_view to_string(DocKind k);

/// One `[POLICY: ...]` or `[STRATEGY: ...]` block.
struct KnowledgeDocument {
    DocKind kind = DocKind::Policy;
    std::string name;
    std::string description;
    std::optional<Role> entity;              // Policy documents only
    std::map<std::string, std::int64_t> parameters;

    friend bool operator==(const KnowledgeDocument&, const KnowledgeDocument&) = default;
};

/// Lowercased alphanumeric token runs, in order of appearance.
std::vector<std::string> tokenize(std::string_view text);

/// Cosine similarity of the term-frequency vectors of two token multisets.
/// Zero if either side is empty.
double similarity(const std::vector<std::string>& query_tokens,
                  const std::vector<std::string>& doc_tokens);

/// Immutable document collection with a per-document token index.
class KnowledgeBase {
  public:
    static KnowledgeBase parse(std::string_view text);
    static KnowledgeBase load(const std::string& path);

    const std::vector<KnowledgeDocument>& documents() const { return docs_; }
    bool empty() const { return docs_.empty(); }

    /// Best-scoring document for the query, ties broken by smallest name.
    /// Throws NoMatchError when every score is zero.
    const KnowledgeDocument& retrieve(std::string_view query,
                                      std::optional<DocKind> kind_filter = {}) const;

    /// All Strategy documents ranked by similarity, ties by name.
    /// Throws NoMatchError when the base holds no Strategy documents.
    std::vector<KnowledgeDocument> retrieve_portfolio(std::string_view query) const;

    const KnowledgeDocument* find(std::string_view name) const;

    /// Canonical text form; parse(serialize(kb)) == kb.
    std::string serialize() const;

    friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;

  private:
    std::vector<KnowledgeDocument> docs_;
    std::vector<std::vector<std::string>> doc_tokens_;  // name + description + entity

    void rebuild_index();
};

/// Parameter map of a Strategy document with defaults applied
/// (missing transport_cost_premium reads as zero).
StrategyParameters extract_parameters(const KnowledgeDocument& doc);

}  // namespace bullwhip
