#include "blex/ontology.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "blex/error.hpp"

namespace blex {

const RoleSlot* BleachedStatement::find_role(const std::string& role) const {
    for (const RoleSlot& slot : placeholders)
        if (slot.role == role) return &slot;
    return nullptr;
}

const BleachedStatement* Ontology::find(const std::string& event_type) const {
    for (const BleachedStatement& stmt : entries)
        if (stmt.event_type == event_type) return &stmt;
    return nullptr;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct LineParser {
    const std::string& source;
    int line_no;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(source, line_no, msg);
    }

    BleachedStatement parse(const std::string& line) const {
        std::size_t sep = line.find("::");
        if (sep == std::string::npos)
            fail("missing '::' between event type and statement");

        BleachedStatement stmt;
        stmt.event_type = trim(line.substr(0, sep));
        if (stmt.event_type.empty()) fail("empty event type");

        const std::string body = line.substr(sep + 2);

        // Single pass over the body. Placeholder markup may not nest;
        // escapes produce literal characters inside the current token.
        std::string cur;                  // token under construction
        bool in_placeholder = false;
        bool seen_pipe = false;           // inside [role|words], past the '|'
        std::string role;
        int placeholder_start = -1;       // 1-based index of first word

        auto flush_token = [&]() {
            if (cur.empty()) return;
            stmt.tokens.push_back(cur);
            cur.clear();
        };

        for (std::size_t p = 0; p < body.size(); ++p) {
            char c = body[p];
            if (c == '\\') {
                if (p + 1 >= body.size()) fail("dangling escape at end of line");
                char nxt = body[p + 1];
                if (nxt != '[' && nxt != ']' && nxt != '|')
                    fail(std::string("unknown escape '\\") + nxt + "'");
                cur += nxt;
                ++p;
            } else if (c == '[') {
                if (in_placeholder) fail("nested '[' in placeholder");
                flush_token();
                in_placeholder = true;
                seen_pipe = false;
                role.clear();
            } else if (c == '|') {
                if (!in_placeholder) fail("'|' outside placeholder (escape as \\|)");
                if (seen_pipe) fail("second '|' in placeholder");
                role = trim(cur);
                cur.clear();
                seen_pipe = true;
                placeholder_start = static_cast<int>(stmt.tokens.size()) + 1;
            } else if (c == ']') {
                if (!in_placeholder) fail("']' without matching '[' (escape as \\])");
                if (!seen_pipe) fail("placeholder missing '|' separator");
                flush_token();
                int placeholder_end = static_cast<int>(stmt.tokens.size());
                if (role.empty()) fail("empty role name in placeholder");
                if (role == kTriggerRole)
                    fail("role name 'trigger' is reserved");
                if (placeholder_end < placeholder_start)
                    fail("empty placeholder for role '" + role + "'");
                for (const RoleSlot& existing : stmt.placeholders)
                    if (existing.role == role)
                        fail("duplicate role '" + role + "'");
                RoleSlot slot;
                slot.role = role;
                for (int i = placeholder_start; i <= placeholder_end; ++i)
                    slot.indices.push_back(i);
                stmt.placeholders.push_back(std::move(slot));
                in_placeholder = false;
            } else if (c == ' ' || c == '\t') {
                if (in_placeholder && !seen_pipe)
                    cur += c;  // role names are trimmed later; keep spaces
                else
                    flush_token();
            } else {
                cur += c;
            }
        }
        if (in_placeholder) fail("unterminated placeholder (missing ']')");
        flush_token();

        if (stmt.tokens.empty()) fail("statement has no tokens");
        return stmt;
    }
};

std::string escape_token(const std::string& token) {
    std::string out;
    for (char c : token) {
        if (c == '[' || c == ']' || c == '|') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

Ontology parse_ontology(const std::string& text, const std::string& source_name) {
    Ontology ontology;
    std::set<std::string> seen_types;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        LineParser parser{source_name, line_no};
        BleachedStatement stmt = parser.parse(stripped);
        if (!seen_types.insert(stmt.event_type).second)
            parser.fail("duplicate event type '" + stmt.event_type + "'");
        ontology.entries.push_back(std::move(stmt));
    }
    return ontology;
}

Ontology load_ontology(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ontology file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ontology(buf.str(), path);
}

std::string serialize_ontology(const Ontology& ontology) {
    std::string out;
    for (const BleachedStatement& stmt : ontology.entries) {
        out += stmt.event_type;
        out += " ::";
        std::size_t slot_idx = 0;
        for (int i = 1; i <= stmt.size(); ++i) {
            while (slot_idx < stmt.placeholders.size() &&
                   stmt.placeholders[slot_idx].indices.back() < i)
                ++slot_idx;
            const RoleSlot* slot = slot_idx < stmt.placeholders.size()
                                       ? &stmt.placeholders[slot_idx]
                                       : nullptr;
            out += ' ';
            if (slot && slot->indices.front() == i) out += '[' + slot->role + '|';
            out += escape_token(stmt.tokens[i - 1]);
            if (slot && slot->indices.back() == i) out += ']';
        }
        out += '\n';
    }
    return out;
}

std::vector<int> trigger_index_set(const BleachedStatement& stmt) {
    std::vector<bool> covered(stmt.tokens.size() + 1, false);
    for (const RoleSlot& slot : stmt.placeholders)
        for (int i : slot.indices) covered[i] = true;

    std::vector<int> result;
    for (int i = 1; i <= stmt.size(); ++i)
        if (!covered[i]) result.push_back(i);

    if (result.empty())
        throw ValidationError("statement for '" + stmt.event_type +
                              "' consists only of placeholders; no trigger "
                              "tokens remain");
    return result;
}

void validate_ontology(const Ontology& ontology) {
    for (const BleachedStatement& stmt : ontology.entries)
        trigger_index_set(stmt);  // throws on all-placeholder statements
}

std::vector<std::string> render_statement(
    const BleachedStatement& stmt,
    const std::map<std::string, RoleFill>& fills) {
    for (const auto& [role, fill] : fills) {
        if (!stmt.find_role(role))
            throw ValidationError("fill for unknown role '" + role + "'");
        for (const auto& span_tokens : fill)
            if (span_tokens.empty())
                throw ValidationError("empty span fill for role '" + role + "'");
    }

    std::vector<std::string> out;
    std::size_t slot_idx = 0;
    for (int i = 1; i <= stmt.size(); ++i) {
        while (slot_idx < stmt.placeholders.size() &&
               stmt.placeholders[slot_idx].indices.back() < i)
            ++slot_idx;
        const RoleSlot* slot = slot_idx < stmt.placeholders.size()
                                   ? &stmt.placeholders[slot_idx]
                                   : nullptr;
        if (slot && slot->indices.front() == i) {
            auto it = fills.find(slot->role);
            if (it == fills.end() || it->second.empty()) {
                // Unfilled: keep the bleached phrase verbatim.
                for (int j : slot->indices) out.push_back(stmt.tokens[j - 1]);
            } else {
                // Multiple extracted spans are joined with "and".
                const RoleFill& fill = it->second;
                for (std::size_t k = 0; k < fill.size(); ++k) {
                    if (k > 0) out.push_back("and");
                    out.insert(out.end(), fill[k].begin(), fill[k].end());
                }
            }
            i = slot->indices.back();  // loop increment moves past the slot
        } else {
            out.push_back(stmt.tokens[i - 1]);
        }
    }
    return out;
}

}  // namespace blex
