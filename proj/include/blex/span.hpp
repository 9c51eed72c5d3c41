#ifndef BLEX_SPAN_HPP
#define BLEX_SPAN_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace blex {

// All token positions in this codebase are 1-based. Spans are half-open
// [begin, end) intervals over a token sequence, so the span covering the
// first token of a sentence is [1, 2).
struct TokenSpan {
    int begin = 0;
    int end = 0;

    TokenSpan() = default;
    TokenSpan(int b, int e) : begin(b), end(e) {}

    int length() const { return end - begin; }
    bool empty() const { return end <= begin; }
    bool contains(int pos) const { return pos >= begin && pos < end; }
    bool contains(const TokenSpan& other) const {
        return other.begin >= begin && other.end <= end;
    }
    bool overlaps(const TokenSpan& other) const {
        return begin < other.end && other.begin < end;
    }

    bool operator==(const TokenSpan& o) const {
        return begin == o.begin && end == o.end;
    }
    bool operator<(const TokenSpan& o) const {
        if (begin != o.begin) return begin < o.begin;
        return end < o.end;
    }
};

// Zero or more pairwise disjoint, non-empty spans kept sorted by position.
// An empty SpanSet is meaningful: it is the selector's abstention signal.
class SpanSet {
public:
    SpanSet() = default;
    explicit SpanSet(std::vector<TokenSpan> spans);

    void add(TokenSpan span);

    bool empty() const { return spans_.empty(); }
    std::size_t size() const { return spans_.size(); }
    const std::vector<TokenSpan>& spans() const { return spans_; }
    const TokenSpan& operator[](std::size_t i) const { return spans_[i]; }

    bool operator==(const SpanSet& o) const { return spans_ == o.spans_; }

private:
    std::vector<TokenSpan> spans_;  // sorted by begin
};

inline SpanSet::SpanSet(std::vector<TokenSpan> spans) {
    for (const TokenSpan& s : spans) add(s);
}

inline void SpanSet::add(TokenSpan span) {
    if (span.empty())
        throw std::invalid_argument("SpanSet: empty span [" +
                                    std::to_string(span.begin) + "," +
                                    std::to_string(span.end) + ")");
    for (const TokenSpan& s : spans_) {
        if (s.overlaps(span))
            throw std::invalid_argument("SpanSet: overlapping spans");
    }
    auto it = spans_.begin();
    while (it != spans_.end() && it->begin < span.begin) ++it;
    spans_.insert(it, span);
}

// Extracts the token slice covered by a span (positions are 1-based).
inline std::vector<std::string> span_tokens(const std::vector<std::string>& tokens,
                                            const TokenSpan& span) {
    if (span.begin < 1 || span.end > static_cast<int>(tokens.size()) + 1 ||
        span.empty())
        throw std::out_of_range("span [" + std::to_string(span.begin) + "," +
                                std::to_string(span.end) + ") out of bounds for " +
                                std::to_string(tokens.size()) + " tokens");
    return std::vector<std::string>(tokens.begin() + (span.begin - 1),
                                    tokens.begin() + (span.end - 1));
}

inline std::string join_tokens(const std::vector<std::string>& tokens,
                               const std::string& sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out += sep;
        out += tokens[i];
    }
    return out;
}

}  // namespace blex

#endif  // BLEX_SPAN_HPP
