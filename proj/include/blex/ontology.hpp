#ifndef BLEX_ONTOLOGY_HPP
#define BLEX_ONTOLOGY_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blex/span.hpp"

namespace blex {

// Reserved pseudo-role: the trigger is addressed through the statement
// positions that belong to no declared placeholder, never through a slot.
inline constexpr const char* kTriggerRole = "trigger";

// One placeholder of a bleached statement: a role name plus the 1-based
// statement positions its bleached phrase occupies. Positions are sorted,
// contiguous and disjoint from every other slot of the same statement.
struct RoleSlot {
    std::string role;
    std::vector<int> indices;

    TokenSpan span() const {
        return TokenSpan(indices.front(), indices.back() + 1);
    }
};

// A bleached statement: generic natural-language description of one event
// type, with placeholder phrases standing in for the arguments. Slot order
// is the fill order (left to right).
struct BleachedStatement {
    std::string event_type;
    std::vector<std::string> tokens;
    std::vector<RoleSlot> placeholders;

    int size() const { return static_cast<int>(tokens.size()); }
    const RoleSlot* find_role(const std::string& role) const;
};

struct Ontology {
    std::vector<BleachedStatement> entries;

    const BleachedStatement* find(const std::string& event_type) const;
    bool empty() const { return entries.empty(); }
};

// Parses the one-statement-per-line ontology format:
//
//   EVENT_TYPE :: tokens with [role|placeholder words] markup
//
// '#' lines are comments, blank lines are skipped. '\[', '\]' and '\|'
// escape literal brackets and pipes inside tokens. Throws ParseError with
// "<source>:<line>" context on malformed markup, duplicate roles, duplicate
// event types, empty placeholders, or a placeholder named "trigger".
Ontology parse_ontology(const std::string& text,
                        const std::string& source_name = "<ontology>");
Ontology load_ontology(const std::string& path);

// Inverse of parse_ontology: emits lines that parse back to an identical
// ontology (escapes reapplied).
std::string serialize_ontology(const Ontology& ontology);

// Statement positions not covered by any placeholder, ascending. May be
// non-contiguous. Throws ValidationError when the statement consists only
// of placeholders (no tokens left to express the event occurrence).
std::vector<int> trigger_index_set(const BleachedStatement& stmt);

// Rejects statements whose trigger index set is empty; parse_ontology
// accepts them so that diagnostics can point at the offending line.
void validate_ontology(const Ontology& ontology);

// One role's extracted contents: the text tokens of each selected span,
// in text order.
using RoleFill = std::vector<std::vector<std::string>>;

// Replaces filled placeholders with their extracted spans, joining multiple
// spans with the token "and". Unfilled placeholders keep their bleached
// tokens, so rendering with no fills is the identity.
std::vector<std::string> render_statement(
    const BleachedStatement& stmt,
    const std::map<std::string, RoleFill>& fills);

}  // namespace blex

#endif  // BLEX_ONTOLOGY_HPP
