#include "arrtopo/boolean_formula.hpp"

#include <cctype>

namespace arrtopo {

BooleanFormula BooleanFormula::atom(std::size_t index)
{
    if (index < 1)
        throw FormulaError("atom index must be at least 1");
    BooleanFormula f;
    f.kind_ = Kind::atom;
    f.index_ = index;
    return f;
}

BooleanFormula BooleanFormula::conjunction(BooleanFormula lhs, BooleanFormula rhs)
{
    BooleanFormula f;
    f.kind_ = Kind::conjunction;
    f.lhs_ = std::make_shared<const BooleanFormula>(std::move(lhs));
    f.rhs_ = std::make_shared<const BooleanFormula>(std::move(rhs));
    return f;
}

BooleanFormula BooleanFormula::disjunction(BooleanFormula lhs, BooleanFormula rhs)
{
    BooleanFormula f;
    f.kind_ = Kind::disjunction;
    f.lhs_ = std::make_shared<const BooleanFormula>(std::move(lhs));
    f.rhs_ = std::make_shared<const BooleanFormula>(std::move(rhs));
    return f;
}

std::size_t BooleanFormula::max_atom() const
{
    if (kind_ == Kind::atom)
        return index_;
    return std::max(lhs_->max_atom(), rhs_->max_atom());
}

std::string BooleanFormula::to_string() const
{
    switch (kind_) {
    case Kind::atom:
        return "T" + std::to_string(index_);
    case Kind::conjunction:
        return "(" + lhs_->to_string() + " & " + rhs_->to_string() + ")";
    case Kind::disjunction:
        return "(" + lhs_->to_string() + " | " + rhs_->to_string() + ")";
    }
    return {};
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    BooleanFormula parse()
    {
        BooleanFormula f = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw FormulaError("malformed formula at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool keyword(std::string_view word)
    {
        skip_space();
        if (text_.substr(pos_, word.size()) != word)
            return false;
        const std::size_t end = pos_ + word.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end])))
            return false;
        pos_ = end;
        return true;
    }

    bool symbol(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BooleanFormula expr()
    {
        BooleanFormula f = term();
        while (symbol('|') || keyword("or"))
            f = BooleanFormula::disjunction(std::move(f), term());
        return f;
    }

    BooleanFormula term()
    {
        BooleanFormula f = factor();
        while (symbol('&') || keyword("and"))
            f = BooleanFormula::conjunction(std::move(f), factor());
        return f;
    }

    BooleanFormula factor()
    {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '!' || c == '~' || c == '-' || keyword("not"))
            throw FormulaError("negation is not allowed in a closed formula");
        if (symbol('(')) {
            BooleanFormula f = expr();
            if (!symbol(')'))
                fail("expected ')'");
            return f;
        }
        if (c == 'T' || c == 't') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("atom needs an index");
            const std::size_t index = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (index == 0)
                fail("atom indices start at 1");
            return BooleanFormula::atom(index);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

BooleanFormula BooleanFormula::parse(std::string_view text) { return Parser(text).parse(); }

CellSet boolean_combination(const Arrangement& arr, const BooleanFormula& formula)
{
    if (formula.max_atom() > arr.size())
        throw FormulaError("formula atom T" + std::to_string(formula.max_atom()) + " exceeds n = " +
                           std::to_string(arr.size()));
    switch (formula.kind()) {
    case BooleanFormula::Kind::atom:
        return arr.member(formula.atom_index());
    case BooleanFormula::Kind::conjunction:
        return cell_set_intersection(boolean_combination(arr, formula.lhs()), boolean_combination(arr, formula.rhs()));
    case BooleanFormula::Kind::disjunction:
        return cell_set_union(boolean_combination(arr, formula.lhs()), boolean_combination(arr, formula.rhs()));
    }
    return {};
}

BooleanFormula random_formula(std::mt19937_64& rng, std::size_t n, std::size_t max_depth)
{
    const std::uint64_t pick = rng();
    if (max_depth == 0 || pick % 3 == 0)
        return BooleanFormula::atom(1 + rng() % n);
    BooleanFormula lhs = random_formula(rng, n, max_depth - 1);
    BooleanFormula rhs = random_formula(rng, n, max_depth - 1);
    return (pick % 3 == 1) ? BooleanFormula::conjunction(std::move(lhs), std::move(rhs))
                           : BooleanFormula::disjunction(std::move(lhs), std::move(rhs));
}

} // namespace arrtopo
