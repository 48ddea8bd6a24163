#ifndef HSW_SPECTRUM_HPP
#define HSW_SPECTRUM_HPP

#include <iosfwd>
#include <vector>

#include "hsw/graph.hpp"
#include "hsw/hsw.hpp"

namespace hsw {

// Largest matrix handed to the dense eigensolver.
inline constexpr int kDenseLimit = 4096;

// Near-equal numeric eigenvalues closer than this are clustered into one
// multiplicity. The true spectra here are integer-valued, so clusters are
// far apart at desk scale.
inline constexpr double kClusterGap = 1e-6;

struct SpectrumResult {
    enum class Source { closed_form, numeric };

    long long n = 0;
    Source source = Source::numeric;
    // (eigenvalue, multiplicity), ascending by eigenvalue.
    std::vector<std::pair<double, long long>> pairs;

    long long multiplicity_sum() const;
    double trace() const; // sum of eigenvalue * multiplicity
};

// Corollary-style closed form for M_g^r: eigenvalue 0 once, and for each
// i in [0, g-1] eigenvalue i+1 with multiplicity (r-1) r^i plus eigenvalue
// (r^{g-i+1}-1)/(r-1) + i with multiplicity r^i. Coinciding values from the
// two families would be merged by summing multiplicities.
SpectrumResult closed_form_spectrum(int r, int g);

// Dense Laplacian spectrum via the in-repo Jacobi solver, clustered into
// multiplicities. Independent of the closed form above.
SpectrumResult numeric_spectrum(const Graph& g, int dense_limit = kDenseLimit);

struct EigenPair {
    double eigenvalue = 0.0;
    std::vector<double> vector;
};

// Theorem-1 family 1: eigenvalue d_g(v)+1 for a non-leaf v, vector -D_v at
// v, +1 on every descendant, 0 elsewhere.
EigenPair eigenvector_family1(const HierarchicalNetwork& net, int v);

// Theorem-1 family 2: eigenvalue l_g(v)+1 for a non-leaf v, vector -1 on the
// first child subtree, +1 on the s-th child subtree (s in [2, r]).
EigenPair eigenvector_family2(const HierarchicalNetwork& net, int v, int s);

// max_i |(L x)_i - lambda x_i| / max_i |x_i|
double eigen_residual(const Graph& g, const EigenPair& pair);

// Transition-matrix spectrum (eigenvalues of D^{-1/2} A D^{-1/2}, similar
// to P), sorted descending so theta_1 = 1.
std::vector<double> transition_spectrum(const Graph& g, int dense_limit = kDenseLimit);

struct SpectralExtremes {
    double lambda2 = 0.0;
    double lambdaN = 0.0;
    double eps_max = 0.0; // pi / (2 lambdaN)
};

SpectralExtremes extremes(const SpectrumResult& spec);

// {"n":…,"source":"closed_form"|"numeric","pairs":[{"lambda":…,"mult":…},…]}
void write_spectrum_json(const SpectrumResult& spec, std::ostream& out);

} // namespace hsw

#endif
