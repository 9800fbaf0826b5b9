#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lm/action.hpp"
#include "lm/group_word.hpp"
#include "lm/tree_pair.hpp"

namespace lm {

// ---- characters ----

enum class Character { Chi0, Chi1, Psi0, Psi1, Psi, PsiHat };

std::string character_name(Character c);
Character parse_character(std::string_view s);

class CharacterUndefined : public Error {
public:
    using Error::Error;
};

bool character_defined(Character c, Tag t);
long letter_value(Character c, const Generator& g);
long char_value(Character c, const GroupWord& w);

// Character whose value is the height h of the Morse function for a tag.
Character height_character(Tag t);

// ---- special forms ----

struct YTerm {
    BinaryWord sub;
    int exp = 1;
    friend bool operator==(const YTerm&, const YTerm&) = default;
};

class SpecialForm {
public:
    static std::optional<SpecialForm> from_word(const GroupWord& w);
    static SpecialForm from_entries(std::vector<YTerm> entries);  // throws when invalid

    const std::vector<YTerm>& entries() const { return entries_; }
    const BinaryWord& first() const { return entries_.front().sub; }
    const YTerm& last() const { return entries_.back(); }
    GroupWord word(Tag tag = Tag::Shat) const;
    SpecialForm inverse() const;
    long psi_hat() const;
    std::string str() const { return word().str(); }
    friend bool operator==(const SpecialForm&, const SpecialForm&) = default;

private:
    std::vector<YTerm> entries_;
};

std::optional<SpecialForm> is_special_form(const GroupWord& w);
bool independent_forms(const std::vector<SpecialForm>& forms);

// ---- standard forms and rewriting ----

struct StandardForm {
    GroupWord head{Tag::T};
    std::vector<YTerm> tail;
    GroupWord word() const;
    std::string str() const;
};

struct RewriteOptions {
    std::size_t max_steps = 100000;
    std::size_t max_subscript = 12;
    std::size_t validate_depth = kDefaultDepth;
    // Trade a trailing x_s^-1 of the head for y_s0 y_s10^-1 y_s11 in the tail.
    bool absorb = true;
};

class RewriteBudgetExceeded : public Error {
public:
    RewriteBudgetExceeded(const std::string& what, GroupWord partial)
        : Error(what + "; partial word: " + partial.str()), partial_(std::move(partial)) {}
    const GroupWord& partial() const { return partial_; }

private:
    GroupWord partial_;
};

StandardForm rewrite_standard_form(const GroupWord& w, const RewriteOptions& opts = {});

bool decide_T_identity(const GroupWord& w);

// If w acts on every cone below some finite prefix code by a prefix replacement, the
// resulting element of T; the check is exact, exploring all continuations.
std::optional<TElement> certify_T(const GroupWord& w, std::size_t max_nodes = 4096);

// ---- decisions ----

enum class Verdict { Yes, No, Unknown };
std::string verdict_name(Verdict v);

struct Decision {
    Verdict verdict = Verdict::Unknown;
    std::string reason;
    std::optional<BinaryWord> witness;
};

enum class WordProblem { Identity, NotIdentity, Unknown };
std::string word_problem_name(WordProblem v);

struct WordProblemResult {
    WordProblem verdict = WordProblem::Unknown;
    std::optional<BinaryWord> witness;
    std::string reason;
};

WordProblemResult word_problem(const GroupWord& w, const RewriteOptions& opts = {});
Decision in_F(const GroupWord& w, const RewriteOptions& opts = {});
Decision same_coset(const GroupWord& g, const GroupWord& h, const RewriteOptions& opts = {});

// Representative key of the coset F g: the standard form with a leading x-prefix dropped.
std::string coset_key(const GroupWord& g, const RewriteOptions& opts = {});

}  // namespace lm
