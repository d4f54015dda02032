#pragma once

#include "arrtopo/arrangement.hpp"

#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arrtopo {

struct FormulaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Negation-free Boolean formula over atoms T_1..T_n.
class BooleanFormula {
public:
    enum class Kind { atom, conjunction, disjunction };

    static BooleanFormula atom(std::size_t index);
    static BooleanFormula conjunction(BooleanFormula lhs, BooleanFormula rhs);
    static BooleanFormula disjunction(BooleanFormula lhs, BooleanFormula rhs);

    /// Grammar: expr := term ('|' term)*; term := factor ('&' factor)*;
    /// factor := 'T' digits | '(' expr ')'. Also accepts "and"/"or".
    /// Any negation ('!', '~', '-', "not") is rejected.
    static BooleanFormula parse(std::string_view text);

    Kind kind() const { return kind_; }
    std::size_t atom_index() const { return index_; }
    const BooleanFormula& lhs() const { return *lhs_; }
    const BooleanFormula& rhs() const { return *rhs_; }

    std::size_t max_atom() const;
    std::string to_string() const;

private:
    BooleanFormula() = default;

    Kind kind_ = Kind::atom;
    std::size_t index_ = 0;
    std::shared_ptr<const BooleanFormula> lhs_;
    std::shared_ptr<const BooleanFormula> rhs_;
};

/// A_theta: AND evaluates to intersection, OR to union. Throws FormulaError
/// when an atom index exceeds the arrangement size.
CellSet boolean_combination(const Arrangement& arr, const BooleanFormula& formula);

/// Random formula over T_1..T_n with at most `max_depth` connective levels.
BooleanFormula random_formula(std::mt19937_64& rng, std::size_t n, std::size_t max_depth);

} // namespace arrtopo
