#include "fatdelta/simplex.hpp"

#include "fatdelta/error.hpp"

#include <algorithm>
#include <sstream>

namespace fatdelta {

MonotoneMap::MonotoneMap()
    : m_dom(0)
    , m_cod(0)
    , m_images{0}
{
}

MonotoneMap::MonotoneMap(int dom_size, int cod_size, std::vector<int> images)
    : m_dom(dom_size)
    , m_cod(cod_size)
    , m_images(std::move(images))
{
    if (dom_size < -1 || cod_size < -1) {
        throw Error("monotone map: sizes must be >= -1");
    }
    if (static_cast<int>(m_images.size()) != dom_size + 1) {
        throw Error("monotone map: expected " + std::to_string(dom_size + 1) + " images, got "
                    + std::to_string(m_images.size()));
    }
    for (size_t x = 0; x < m_images.size(); ++x) {
        if (m_images[x] < 0 || m_images[x] > cod_size) {
            throw Error("monotone map: image out of range at " + std::to_string(x));
        }
        if (x > 0 && m_images[x] < m_images[x - 1]) {
            throw Error("monotone map: images not weakly increasing at " + std::to_string(x));
        }
    }
}

MonotoneMap MonotoneMap::identity(int n)
{
    std::vector<int> img(static_cast<size_t>(n + 1));
    for (int x = 0; x <= n; ++x) {
        img[static_cast<size_t>(x)] = x;
    }
    return MonotoneMap(Unchecked{}, n, n, std::move(img));
}

MonotoneMap MonotoneMap::terminal(int m)
{
    return MonotoneMap(Unchecked{}, m, 0, std::vector<int>(static_cast<size_t>(m + 1), 0));
}

bool MonotoneMap::is_epi() const
{
    // monotone: surjective iff it starts at 0, ends at cod and never jumps
    if (m_cod == -1) {
        return true;
    }
    if (m_images.empty() || m_images.front() != 0 || m_images.back() != m_cod) {
        return false;
    }
    for (size_t x = 1; x < m_images.size(); ++x) {
        if (m_images[x] - m_images[x - 1] > 1) {
            return false;
        }
    }
    return true;
}

bool MonotoneMap::is_mono() const
{
    for (size_t x = 1; x < m_images.size(); ++x) {
        if (m_images[x] == m_images[x - 1]) {
            return false;
        }
    }
    return true;
}

bool MonotoneMap::is_identity() const
{
    if (m_dom != m_cod) {
        return false;
    }
    for (size_t x = 0; x < m_images.size(); ++x) {
        if (m_images[x] != static_cast<int>(x)) {
            return false;
        }
    }
    return true;
}

MonotoneMap compose_maps(const MonotoneMap& g, const MonotoneMap& f)
{
    if (f.cod_size() != g.dom_size()) {
        throw Error("compose_maps: " + to_string(f) + " does not compose with " + to_string(g));
    }
    std::vector<int> img(f.images().size());
    for (size_t x = 0; x < img.size(); ++x) {
        img[x] = g(f.images()[x]);
    }
    return MonotoneMap(MonotoneMap::Unchecked{}, f.dom_size(), g.cod_size(), std::move(img));
}

MonotoneMap face_map(int n, int i)
{
    if (n < 1 || i < 0 || i > n) {
        throw Error("face_map: need n >= 1 and 0 <= i <= n (n=" + std::to_string(n)
                    + ", i=" + std::to_string(i) + ")");
    }
    std::vector<int> img;
    img.reserve(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
        img.push_back(x < i ? x : x + 1);
    }
    return MonotoneMap(n - 1, n, std::move(img));
}

MonotoneMap degeneracy_map(int n, int i)
{
    if (n < 0 || i < 0 || i > n) {
        throw Error("degeneracy_map: need n >= 0 and 0 <= i <= n (n=" + std::to_string(n)
                    + ", i=" + std::to_string(i) + ")");
    }
    std::vector<int> img;
    img.reserve(static_cast<size_t>(n + 2));
    for (int x = 0; x <= n + 1; ++x) {
        img.push_back(x <= i ? x : x - 1);
    }
    return MonotoneMap(n + 1, n, std::move(img));
}

EpiMono epi_mono_factor(const MonotoneMap& f)
{
    std::vector<int> values;
    std::vector<int> epi_img;
    epi_img.reserve(f.images().size());
    for (int y : f.images()) {
        if (values.empty() || values.back() != y) {
            values.push_back(y);
        }
        epi_img.push_back(static_cast<int>(values.size()) - 1);
    }
    const int mid = static_cast<int>(values.size()) - 1;
    return {MonotoneMap(f.dom_size(), mid, std::move(epi_img)),
            MonotoneMap(mid, f.cod_size(), std::move(values))};
}

std::vector<int> mono_to_faces(const MonotoneMap& f)
{
    if (!f.is_mono()) {
        throw Error("mono_to_faces: " + to_string(f) + " is not a monomorphism");
    }
    if (f.dom_size() < 0) {
        throw Error("mono_to_faces: augmented domain not supported");
    }
    std::vector<int> faces;
    size_t next = 0;
    for (int y = 0; y <= f.cod_size(); ++y) {
        if (next < f.images().size() && f.images()[next] == y) {
            ++next;
        } else {
            faces.push_back(y);
        }
    }
    return faces;
}

std::vector<int> epi_to_degeneracies(const MonotoneMap& f)
{
    if (!f.is_epi()) {
        throw Error("epi_to_degeneracies: " + to_string(f) + " is not an epimorphism");
    }
    if (f.dom_size() < 0) {
        throw Error("epi_to_degeneracies: augmented domain not supported");
    }
    std::vector<int> out;
    for (int j = 0; j < f.dom_size(); ++j) {
        if (f(j) == f(j + 1)) {
            // collapsing earlier edges shifts this one left by the count so far
            out.push_back(j - static_cast<int>(out.size()));
        }
    }
    return out;
}

MonotoneMap faces_to_map(int dom_size, const std::vector<int>& faces)
{
    MonotoneMap acc = MonotoneMap::identity(dom_size);
    for (int i : faces) {
        acc = compose_maps(face_map(acc.cod_size() + 1, i), acc);
    }
    return acc;
}

MonotoneMap degeneracies_to_map(int dom_size, const std::vector<int>& degeneracies)
{
    MonotoneMap acc = MonotoneMap::identity(dom_size);
    for (int i : degeneracies) {
        acc = compose_maps(degeneracy_map(acc.cod_size() - 1, i), acc);
    }
    return acc;
}

bool is_active(const MonotoneMap& f)
{
    if (f.dom_size() < 0) {
        return f.cod_size() < 0;
    }
    return f(0) == 0 && f(f.dom_size()) == f.cod_size();
}

bool is_inert(const MonotoneMap& f)
{
    for (int x = 0; x < f.dom_size(); ++x) {
        if (f(x + 1) != f(x) + 1) {
            return false;
        }
    }
    return true;
}

ActiveInert active_inert_factor(const MonotoneMap& f)
{
    if (f.dom_size() < 0) {
        throw Error("active_inert_factor: augmented domain not supported");
    }
    const int lo = f(0);
    const int span = f(f.dom_size()) - lo;
    std::vector<int> act(f.images());
    for (int& y : act) {
        y -= lo;
    }
    std::vector<int> inert(static_cast<size_t>(span + 1));
    for (int y = 0; y <= span; ++y) {
        inert[static_cast<size_t>(y)] = y + lo;
    }
    return {MonotoneMap(f.dom_size(), span, std::move(act)),
            MonotoneMap(span, f.cod_size(), std::move(inert))};
}

Pushout pushout_along_epi(const MonotoneMap& e, const MonotoneMap& a)
{
    if (!e.is_epi() || !a.is_mono()) {
        throw Error("pushout_along_epi: need an epi and a mono");
    }
    if (e.dom_size() != a.dom_size() || e.dom_size() < 0) {
        throw Error("pushout_along_epi: legs must share a non-empty domain");
    }
    const int k = a.cod_size();
    // edge t of [k] is collapsed iff it lies between the images of one fibre of e
    std::vector<bool> collapsed(static_cast<size_t>(std::max(k, 0)), false);
    for (int x = 0; x < e.dom_size(); ++x) {
        if (e(x) == e(x + 1)) {
            for (int t = a(x); t < a(x + 1); ++t) {
                collapsed[static_cast<size_t>(t)] = true;
            }
        }
    }
    std::vector<int> from_k(static_cast<size_t>(k + 1));
    int level = 0;
    for (int t = 0; t <= k; ++t) {
        if (t > 0 && !collapsed[static_cast<size_t>(t - 1)]) {
            ++level;
        }
        from_k[static_cast<size_t>(t)] = level;
    }
    std::vector<int> from_n(static_cast<size_t>(e.cod_size() + 1));
    for (int x = 0; x <= e.dom_size(); ++x) {
        from_n[static_cast<size_t>(e(x))] = from_k[static_cast<size_t>(a(x))];
    }
    return {level, MonotoneMap(e.cod_size(), level, std::move(from_n)),
            MonotoneMap(k, level, std::move(from_k))};
}

Pullback pullback_along_mono(const MonotoneMap& b, const MonotoneMap& k)
{
    if (!b.is_mono() || !k.is_epi()) {
        throw Error("pullback_along_mono: need a mono and an epi");
    }
    if (b.cod_size() != k.cod_size()) {
        throw Error("pullback_along_mono: legs must share a codomain");
    }
    std::vector<int> preimage(static_cast<size_t>(b.cod_size() + 1), -1);
    for (int y = 0; y <= b.dom_size(); ++y) {
        preimage[static_cast<size_t>(b(y))] = y;
    }
    std::vector<int> to_m;
    std::vector<int> to_n;
    for (int x = 0; x <= k.dom_size(); ++x) {
        const int y = preimage[static_cast<size_t>(k(x))];
        if (y >= 0) {
            to_m.push_back(x);
            to_n.push_back(y);
        }
    }
    const int p = static_cast<int>(to_m.size()) - 1;
    return {p, MonotoneMap(p, k.dom_size(), std::move(to_m)),
            MonotoneMap(p, b.dom_size(), std::move(to_n))};
}

MonotoneMap ordinal_sum(const MonotoneMap& f, const MonotoneMap& g)
{
    std::vector<int> img(f.images());
    img.reserve(f.images().size() + g.images().size());
    for (int y : g.images()) {
        img.push_back(y + f.cod_size() + 1);
    }
    return MonotoneMap(f.dom_size() + g.dom_size() + 1, f.cod_size() + g.cod_size() + 1,
                       std::move(img));
}

MonotoneMap vee(const MonotoneMap& f, const MonotoneMap& g)
{
    if (f.dom_size() < 0 || g.dom_size() < 0 || !is_active(f) || !is_active(g)) {
        throw Error("vee: both maps must be active and non-augmented");
    }
    std::vector<int> img(f.images());
    for (size_t x = 1; x < g.images().size(); ++x) {
        img.push_back(g.images()[x] + f.cod_size());
    }
    return MonotoneMap(f.dom_size() + g.dom_size(), f.cod_size() + g.cod_size(), std::move(img));
}

std::string to_string(const MonotoneMap& f)
{
    std::ostringstream out;
    out << f.dom_size() << "->" << f.cod_size() << ":[";
    for (size_t x = 0; x < f.images().size(); ++x) {
        out << (x ? "," : "") << f.images()[x];
    }
    out << "]";
    return out.str();
}

} // namespace fatdelta
