#pragma once

#include <optional>
#include <string>

#include "lm/group_word.hpp"

namespace lm {

// An element of T as a prefix replacement between two complete prefix codes.
// Rows are kept sorted by domain and fully reduced, so equal elements compare equal.
class TElement {
public:
    TElement();  // identity
    explicit TElement(Rows rows);

    static TElement from_word(const GroupWord& w);  // X and P letters only

    const Rows& rows() const { return rows_; }
    // this, then o (right action).
    TElement then(const TElement& o) const;
    TElement inverse() const;

    bool is_identity() const { return rows_.size() == 1 && rows_[0].first.empty(); }
    // Order preserving on leaves; equivalently fixes 0^inf.
    bool in_F() const;
    std::optional<BinaryWord> apply(const BinaryWord& s) const { return apply_rows(rows_, s); }

    // x-word times a rotation power, freely reduced.
    GroupWord to_word() const;

    std::string str() const;
    friend bool operator==(const TElement&, const TElement&) = default;

private:
    void normalize();
    Rows rows_;
};

// Letters of x-generators carrying the leaves of a complete prefix code, in order, onto
// the right vine {0, 10, ..., 1^{N-2}0, 1^{N-1}}.
GroupWord vine_word(std::vector<BinaryWord> code);

bool is_complete_prefix_code(const std::vector<BinaryWord>& code);

}  // namespace lm
