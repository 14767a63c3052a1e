#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace fatdelta {

/**
 * A weakly order-preserving map [m] -> [n] between finite ordinals.
 *
 * Sizes follow the simplicial convention: [m] has m+1 vertices, and the
 * size -1 denotes the empty ordinal of the augmented category. The map is
 * stored as its explicit image list and validated on construction.
 */
class MonotoneMap
{
public:
    /// The identity of [0].
    MonotoneMap();
    MonotoneMap(int dom_size, int cod_size, std::vector<int> images);

    static MonotoneMap identity(int n);
    /// The unique map [m] -> [0].
    static MonotoneMap terminal(int m);

    int dom_size() const { return m_dom; }
    int cod_size() const { return m_cod; }
    const std::vector<int>& images() const { return m_images; }
    int operator()(int x) const { return m_images[static_cast<size_t>(x)]; }

    bool is_epi() const;
    bool is_mono() const;
    bool is_identity() const;

    bool operator==(const MonotoneMap&) const = default;
    auto operator<=>(const MonotoneMap&) const = default;

private:
    struct Unchecked
    {
    };
    MonotoneMap(Unchecked, int dom_size, int cod_size, std::vector<int> images)
        : m_dom(dom_size)
        , m_cod(cod_size)
        , m_images(std::move(images))
    {
    }
    friend MonotoneMap compose_maps(const MonotoneMap&, const MonotoneMap&);

    int m_dom = 0;
    int m_cod = 0;
    std::vector<int> m_images;
};

/// g after f. Requires f.cod_size() == g.dom_size().
MonotoneMap compose_maps(const MonotoneMap& g, const MonotoneMap& f);

/// delta_i : [n-1] -> [n], the injection skipping i.
MonotoneMap face_map(int n, int i);
/// sigma_i : [n+1] -> [n], the surjection repeating i.
MonotoneMap degeneracy_map(int n, int i);

struct EpiMono
{
    MonotoneMap epi;
    MonotoneMap mono;
};

/// The unique factorization f = mono o epi through the image of f.
EpiMono epi_mono_factor(const MonotoneMap& f);

/// Face indices of a mono in application order (first applied first).
/// They are the missing codomain vertices, strictly increasing.
std::vector<int> mono_to_faces(const MonotoneMap& f);

/// Degeneracy indices of an epi in application order. The sequence is
/// weakly increasing: collapsing [2] -> [0] reads (0, 0).
std::vector<int> epi_to_degeneracies(const MonotoneMap& f);

/// Rebuild a map from a face sequence applied to [dom_size].
MonotoneMap faces_to_map(int dom_size, const std::vector<int>& faces);
/// Rebuild a map from a degeneracy sequence applied to [dom_size].
MonotoneMap degeneracies_to_map(int dom_size, const std::vector<int>& degeneracies);

/// Endpoint preserving: f(0) = 0 and f(m) = n.
bool is_active(const MonotoneMap& f);
/// Distance preserving: f(i+1) = f(i) + 1.
bool is_inert(const MonotoneMap& f);

struct ActiveInert
{
    MonotoneMap active;
    MonotoneMap inert;
};

/// f = inert o active, unique.
ActiveInert active_inert_factor(const MonotoneMap& f);

struct Pushout
{
    int cod_size;
    MonotoneMap from_n; ///< leg out of the codomain of the epi
    MonotoneMap from_k; ///< leg out of the codomain of the mono (epi)
};

/// Pushout of the span N <<- M >-> K with e epi and a mono.
Pushout pushout_along_epi(const MonotoneMap& e, const MonotoneMap& a);

struct Pullback
{
    int dom_size;
    MonotoneMap to_m; ///< inclusion into the domain of the epi
    MonotoneMap to_n; ///< epi onto the domain of the mono
};

/// Pullback of the cospan N >-> N' <<- M' with b mono and k epi. The
/// result is the union of the fibres of k over the image of b.
Pullback pullback_along_mono(const MonotoneMap& b, const MonotoneMap& k);

/// Join of ordinals, functorial in both arguments. [-1] is its unit.
MonotoneMap ordinal_sum(const MonotoneMap& f, const MonotoneMap& g);

/// The vee product of two active maps: glue max of the first to min of the
/// second, so [a] v [b] = [a+b].
MonotoneMap vee(const MonotoneMap& f, const MonotoneMap& g);

/// `m->n:[i0,...,im]`
std::string to_string(const MonotoneMap& f);

} // namespace fatdelta
