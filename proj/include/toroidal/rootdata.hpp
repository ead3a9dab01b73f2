#ifndef TOROIDAL_ROOTDATA_HPP
#define TOROIDAL_ROOTDATA_HPP

#include "toroidal/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace toroidal {

/// Integer vector in simple-root coordinates.
using LatticeVec = std::vector<int>;

/// Index of a basis vector of the finite Lie algebra g. Values in
/// [0, rank) are the Cartan elements h_i; values from rank on enumerate the
/// root vectors x_alpha in the order of RootSystem::roots().
using GSym = int;

/// Element of g as a sparse combination of GSym basis vectors.
using GElt = Sparse<GSym>;

/// Finite simply-laced root datum with the Frenkel-Kac Chevalley basis.
///
/// Root vectors x_alpha satisfy
///   [x_a, x_b] = eps(a,b) x_{a+b}   when a+b is a root,
///   [x_a, x_{-a}] = eps(a,-a) h_a = -h_a,
///   [h, x_a] = a(h) x_a,
/// and the invariant form has (x_a, x_{-a}) = -1, (h_i, h_j) = (a_i, a_j).
/// The Chevalley generators are e_i = x_{a_i}, f_i = -x_{-a_i}, so that
/// h_i = [e_i, f_i] and (e_i, f_i) = 1; likewise e_theta = x_theta and
/// f_theta = -x_{-theta}.
class RootSystem {
public:
    /// Builds type A_n (n >= 1), D_n (n >= 4) or E_n (6 <= n <= 8) in the
    /// Bourbaki ordering. Throws std::invalid_argument otherwise.
    static std::shared_ptr<const RootSystem> build(char label, int rank);
    /// Parses labels such as "A1", "D4", "E6".
    static std::shared_ptr<const RootSystem> build(const std::string& name);

    char label() const { return label_; }
    int rank() const { return rank_; }
    std::string name() const { return std::string(1, label_) + std::to_string(rank_); }

    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<LatticeVec>& positive_roots() const { return positive_; }
    /// Positive roots followed by their negatives, in the same order.
    const std::vector<LatticeVec>& roots() const { return roots_; }
    const LatticeVec& theta() const { return theta_; }

    int form(const LatticeVec& a, const LatticeVec& b) const;
    int norm(const LatticeVec& a) const { return form(a, a); }

    /// Sign table on simple roots: -1 on the diagonal, (-1)^{(a_i,a_j)} for
    /// i < j, +1 for i > j.
    int eps_simple(int i, int j) const { return eps_table_[i][j]; }
    /// Bimultiplicative extension of the simple-root table.
    int eps(const LatticeVec& a, const LatticeVec& b) const;

    /// Index into roots() or -1.
    int root_index(const LatticeVec& a) const;
    bool is_root(const LatticeVec& a) const { return root_index(a) >= 0; }
    bool is_positive(const LatticeVec& a) const;

    int dim_g() const { return rank_ + static_cast<int>(roots_.size()); }
    bool is_cartan(GSym s) const { return s >= 0 && s < rank_; }
    bool is_root_sym(GSym s) const { return s >= rank_ && s < dim_g(); }
    GSym cartan_sym(int i) const { return i; }
    GSym root_sym(const LatticeVec& a) const;
    /// Root of a root symbol; zero vector for a Cartan symbol.
    LatticeVec weight(GSym s) const;

    GElt e(int i) const;
    GElt f(int i) const;
    GElt h(int i) const;
    GElt e_theta() const;
    GElt f_theta() const;
    /// Coroot h_a = sum_i a_i h_i for a in the root lattice.
    GElt h_of(const LatticeVec& a) const;

    GElt bracket(GSym a, GSym b) const { return table_[a][b]; }
    GElt bracket(const GElt& x, const GElt& y) const;
    int pairing(GSym a, GSym b) const { return pairing_[a][b]; }
    Rational pairing(const GElt& x, const GElt& y) const;

    LatticeVec zero() const { return LatticeVec(rank_, 0); }

private:
    RootSystem(char label, int rank, std::vector<std::vector<int>> cartan);

    char label_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<LatticeVec> positive_;
    std::vector<LatticeVec> roots_;
    LatticeVec theta_;
    std::vector<std::vector<int>> eps_table_;
    std::vector<std::vector<GElt>> table_;
    std::vector<std::vector<int>> pairing_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

LatticeVec operator+(const LatticeVec& a, const LatticeVec& b);
LatticeVec operator-(const LatticeVec& a, const LatticeVec& b);
LatticeVec operator-(const LatticeVec& a);
LatticeVec operator*(int c, const LatticeVec& a);

} // namespace toroidal

#endif
