#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "beikit/monomial.hpp"

namespace beikit {

/// Term order on monomials. DiagonalLex is lexicographic along the
/// row-major sequence x1 > ... > xn > y1 > ... > yn (the order under which
/// every 2-minor leads with its main diagonal). Block first compares the
/// exponents of the eliminated variables, so those variables dominate; it
/// is the elimination order used by intersection and colon.
class TermOrder {
  public:
    enum class Kind { DiagonalLex, Block };

    static TermOrder diagonal_lex() { return TermOrder(Kind::DiagonalLex); }

    static TermOrder block(const std::vector<VarId>& eliminated, TermOrder inner) {
        TermOrder o(Kind::Block);
        for (VarId v : eliminated) o.elim_.push_back(var_key(v));
        std::sort(o.elim_.begin(), o.elim_.end());
        o.inner_ = std::make_shared<TermOrder>(std::move(inner));
        return o;
    }

    Kind kind() const { return kind_; }
    const std::vector<std::uint16_t>& eliminated_keys() const { return elim_; }
    bool eliminates(std::uint16_t key) const {
        return std::binary_search(elim_.begin(), elim_.end(), key);
    }

    /// -1 / 0 / +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (kind_ == Kind::DiagonalLex) return cmp_diaglex(a, b);
        int c = cmp_restricted(a, b, true);
        if (c != 0) return c;
        return inner_->cmp_masked(a, b, *this);
    }

    std::string str() const {
        if (kind_ == Kind::DiagonalLex) return "DiagonalLex";
        std::string s = "Block({";
        for (std::size_t i = 0; i < elim_.size(); ++i) {
            if (i) s += ",";
            s += var_name(var_from_key(elim_[i]));
        }
        return s + "}, " + inner_->str() + ")";
    }

  private:
    explicit TermOrder(Kind k) : kind_(k) {}

    // lex compare of the sub-vectors keeping (inside == true) or dropping
    // the eliminated variables.
    int cmp_restricted(const Monomial& a, const Monomial& b, bool inside) const {
        const auto& ea = a.entries();
        const auto& eb = b.entries();
        std::size_t i = 0, j = 0;
        auto skip = [&](const std::vector<Monomial::Entry>& v, std::size_t& k) {
            while (k < v.size() && eliminates(v[k].first) != inside) ++k;
        };
        for (;;) {
            skip(ea, i);
            skip(eb, j);
            if (i == ea.size() && j == eb.size()) return 0;
            if (i == ea.size()) return -1;
            if (j == eb.size()) return 1;
            if (ea[i].first < eb[j].first) return 1;
            if (eb[j].first < ea[i].first) return -1;
            if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second ? 1 : -1;
            ++i;
            ++j;
        }
    }

    // inner comparison ignoring the outer block's eliminated variables.
    int cmp_masked(const Monomial& a, const Monomial& b, const TermOrder& outer) const {
        if (kind_ == Kind::DiagonalLex) return outer.cmp_restricted(a, b, false);
        // nested blocks: fall back to filtering copies (not on any hot path)
        auto strip = [&](const Monomial& m) {
            Monomial r;
            for (auto& [k, e] : m.entries())
                if (!outer.eliminates(k))
                    r = r * Monomial::var(var_from_key(k), e);
            return r;
        };
        return compare(strip(a), strip(b));
    }

    Kind kind_;
    std::vector<std::uint16_t> elim_;
    std::shared_ptr<TermOrder> inner_;
};

} // namespace beikit
