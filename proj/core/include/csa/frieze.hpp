#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csa/quiver.hpp"
#include "csa/superring.hpp"

namespace csa {

// ( a  b | gamma )
// ( c  d | delta )
// ( alpha beta | e )
struct OSpMatrix {
    SRational a, b, c, d, e;
    SRational alpha, beta, gamma, delta;

    // Residuals of ad = 1+bc-alpha beta, e = 1+alpha beta, gamma = a beta - b alpha,
    // delta = c beta - d alpha, plus parity of the entries.
    std::vector<std::string> violations() const;
    bool valid() const { return violations().empty(); }
    bool operator==(const OSpMatrix& o) const;
};

OSpMatrix osp_complete(const SRational& a, const SRational& b, const SRational& c, const SRational& alpha,
                       const SRational& beta);
// Variant with d given; checks ad = 1+bc-alpha beta instead of solving for d.
OSpMatrix osp_complete(const SRational& a, const SRational& b, const SRational& c, const SRational& d,
                       const SRational& alpha, const SRational& beta);
OSpMatrix osp_identity(int n, int m);
OSpMatrix operator*(const OSpMatrix& x, const OSpMatrix& y);

// Elementary diamond:
//          B
//      Xi     Psi
//   A             D
//      Phi    Sigma
//          C
struct Diamond {
    Poly A, B, C, D;
    Poly Xi, Psi, Phi, Sigma;
};

// Nonzero residuals of the frieze rule and its consequences, by name.
std::vector<std::string> diamond_residuals(const Diamond& q);

struct EastSolution {
    Poly D, Psi, Sigma;
};
struct WestSolution {
    Poly A, Xi, Phi;
};
EastSolution diamond_solve_east(const Poly& A, const Poly& B, const Poly& C, const Poly& Xi, const Poly& Phi);
WestSolution diamond_solve_west(const Poly& B, const Poly& C, const Poly& D, const Poly& Psi, const Poly& Sigma);

// The dictionary between diamonds and OSp(1|2): top -a, left odd gamma, right odd alpha,
// west b, east -c, lower odds -beta and delta, bottom d.
OSpMatrix diamond_to_osp(const Diamond& q);
Diamond osp_to_diamond(const OSpMatrix& g);

// Half-integer indices are stored doubled: HalfIndex{1} is 1/2.
struct HalfIndex {
    int twice = 0;
    static HalfIndex integer(int i) { return {2 * i}; }
    bool is_integer() const { return twice % 2 == 0; }
    std::string str() const;
    auto operator<=>(const HalfIndex&) const = default;
};

// f_{i,j} lives in row j - i (0..m-1 inside, 1s in rows -1 and m, 0s in rows -2 and m+1).
// phi_{i,j} lives in row j - i (0..m inside, 0s in rows -1 and m+1). Matching the printed
// arrays, f_{i,j} sits in column 2(i+j)+2 and phi_{i,j} in column 2(i+j)+1 of a grid whose
// even rows carry f and odd rows phi.
// The initial diagonal is f_{0,k-1} = x_k and phi_{1/2,k-1/2} = xi_k.
class SuperFrieze {
public:
    int width() const { return m_; }
    int first_diagonal() const { return imin_; }
    int last_diagonal() const { return imax_; }
    int even_arity() const { return n_; }
    int odd_arity() const { return mo_; }

    // nullopt outside the computed range.
    std::optional<Poly> f(int i, int j) const;
    std::optional<Poly> phi(HalfIndex i, HalfIndex j) const;
    Poly f_at(int i, int j) const;               // throws InvalidInput if out of range
    Poly phi_at(HalfIndex i, HalfIndex j) const;  // same

    struct EvenEntry {
        int i, j;
        Poly value;
    };
    struct OddEntry {
        HalfIndex i, j;
        Poly value;
    };
    // Interior entries of every stored diagonal.
    std::vector<EvenEntry> evens() const;
    std::vector<OddEntry> odds() const;

private:
    friend SuperFrieze build_frieze(int, const std::vector<Poly>&, const std::vector<Poly>&, int, int);
    int m_ = 0, n_ = 0, mo_ = 0;
    int imin_ = 0, imax_ = -1;
    // indexed by i - imin: f_{i,i+d}, phi_{i,i+d}, phi_{i+1/2,i+1/2+d}
    std::vector<std::vector<Poly>> even_, odd_int_, odd_half_;
};

// Builds diagonals first..last around the initial one by local diamond solving.
// xs holds m even entries, xis m+1 odd ones, all of one arity.
SuperFrieze build_frieze(int m, const std::vector<Poly>& xs, const std::vector<Poly>& xis, int first, int last);
SuperFrieze build_frieze(int m, const std::vector<Poly>& xs, const std::vector<Poly>& xis);
// x1..xm and xi1..xi(m+1) as free generators.
SuperFrieze symbolic_frieze(int m);
SuperFrieze symbolic_frieze(int m, int first, int last);

struct DiamondFailure {
    int i, j;  // west corner f_{i,j}
    std::vector<std::string> residuals;
};
std::vector<DiamondFailure> check_diamonds(const SuperFrieze& f);

struct GlideReport {
    bool glide = true;
    int checked = 0;
    int period = 0;  // smallest n > 0 with f shifted equal and phi shifted negated, 0 if none seen
    std::vector<std::string> failures;
};
GlideReport check_glide(const SuperFrieze& f);

// Post-hoc diagonal laws between diagonals 0 and 1: x_k x'_k = 1 + x_{k+1} x'_{k-1} + xi_{k+1} xi_k,
// xi'_1 = xi_2 - x'_1 xi_1, and the odd difference law.
std::vector<std::string> check_diagonal_laws(const SuperFrieze& f);

// V_j = a_j V_{j-1} - V_{j-2} - beta_j W_{j-1}, W_j = beta_j V_{j-1} + W_{j-1}.
struct SchrodingerEq {
    int period = 0;
    std::vector<Poly> a;     // a_0 .. a_{n-1}
    std::vector<Poly> beta;  // beta_0 .. beta_{n-1}

    Poly a_at(int j) const;
    Poly beta_at(int j) const;  // beta_{j+n} = -beta_j
    OSpMatrix companion(int j) const;
};

// a_j = f_{j,j}, beta_j = phi_{j,j}; every South-East diagonal (V_j, W_j) = (f_{i,j}, phi_{i,j})
// is checked against the equation.
SchrodingerEq schrodinger_extract(const SuperFrieze& f);
std::vector<std::string> verify_solutions(const SuperFrieze& f, const SchrodingerEq& eq);

// A_n ... A_1.
OSpMatrix monodromy(const SchrodingerEq& eq);
bool is_frieze_monodromy(const OSpMatrix& M);

// Quiver with x1 -> x2 -> ... -> xm and 2-paths xi_{k-1} -> x_k -> xi_k, xi_{k+1} -> x_k -> xi_k.
ExtendedQuiver frieze_quiver(int m);

struct BridgeReport {
    bool ok = true;
    int failed_k = 0;  // 1-based
    std::string detail;
    // steps k at which the sink x_m was allowed besides x_k
    std::vector<int> sink_allowed;
};
// Mutates frieze_quiver(m) at x1..xm and compares with the frieze built from the same data.
// values empty: symbolic; otherwise numeric even entries with free odd generators.
BridgeReport frieze_vs_cluster(int m, const std::vector<Rational>& values = {});

std::string render_text(const SuperFrieze& f);
std::string render_csv(const SuperFrieze& f);

}  // namespace csa
