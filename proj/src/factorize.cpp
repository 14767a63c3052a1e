#include "fatdelta/factorize.hpp"

#include "fatdelta/error.hpp"

#include <algorithm>

namespace fatdelta {

namespace {

void append(std::vector<Letter>& out, const std::vector<Letter>& block)
{
    out.insert(out.end(), block.begin(), block.end());
}

std::string block_string(const std::vector<Letter>& block)
{
    std::string out = "[";
    for (size_t k = 0; k < block.size(); ++k) {
        out += (k ? "," : "") + to_string(block[k]);
    }
    return out + "]";
}

std::string check_block(const std::vector<Letter>& block, const char* name, LetterKind kind,
                        bool strict, bool eps_one_only = false)
{
    for (size_t k = 0; k < block.size(); ++k) {
        const Letter& l = block[k];
        if (l.kind != kind) {
            return std::string(name) + ": letter " + to_string(l) + " has the wrong kind";
        }
        if (eps_one_only && l.eps != 1) {
            return std::string(name) + ": letter " + to_string(l) + " should have eps = 1";
        }
        if (k > 0) {
            const Letter& p = block[k - 1];
            const bool ordered = strict ? (std::pair(p.index, p.eps) < std::pair(l.index, l.eps))
                                        : (p.index <= l.index);
            if (!ordered) {
                return std::string(name) + ": " + to_string(p) + " before " + to_string(l)
                       + " is out of order";
            }
        }
    }
    return {};
}

} // namespace

std::vector<Letter> NormalForm::letters() const
{
    std::vector<Letter> out;
    for (const auto* block : {&sigma, &phi, &nu, &delta, &psi, &tau}) {
        append(out, *block);
    }
    return out;
}

FatMorphism eval(const NormalForm& nf)
{
    return eval_letters(nf.anchor, nf.letters());
}

std::string to_string(const NormalForm& nf)
{
    return "sigma:" + block_string(nf.sigma) + " phi:" + block_string(nf.phi) + " nu:"
           + block_string(nf.nu) + " delta:" + block_string(nf.delta) + " psi:"
           + block_string(nf.psi) + " tau:" + block_string(nf.tau);
}

std::string check_block_discipline(const NormalForm& nf)
{
    for (std::string msg : {
             check_block(nf.sigma, "sigma", LetterKind::D, false),
             check_block(nf.phi, "phi", LetterKind::B, true),
             check_block(nf.nu, "nu", LetterKind::V, true),
             check_block(nf.delta, "delta", LetterKind::S, true),
             check_block(nf.psi, "psi", LetterKind::B, true, true),
             check_block(nf.tau, "tau", LetterKind::V, true),
         }) {
        if (!msg.empty()) {
            return msg;
        }
    }
    return {};
}

VerticalFactors factor_vertical(const FatMorphism& f)
{
    if (!f.bot().is_identity()) {
        throw Error("factor_vertical: the bottom map must be an identity");
    }
    const FatObject& cod = f.cod();
    std::vector<bool> hit(static_cast<size_t>(cod.m() + 1), false);
    for (int y : f.top().images()) {
        hit[static_cast<size_t>(y)] = true;
    }
    VerticalFactors out;
    // ascending vertex order lists bordering vertices by (fibre, eps)
    for (int p = 0; p <= cod.m(); ++p) {
        if (hit[static_cast<size_t>(p)]) {
            continue;
        }
        const int fibre = cod.eta()(p);
        switch (cod.classify(p)) {
        case VertexClass::LeftBordering: out.phi.push_back(Letter::b(fibre, 0)); break;
        case VertexClass::RightBordering: out.phi.push_back(Letter::b(fibre, 1)); break;
        case VertexClass::InnerMarked: out.nu.push_back(Letter::v(p)); break;
        case VertexClass::Standard:
            throw Error("factor_vertical: a whole fibre is missing from the image");
        }
    }
    return out;
}

HorizontalFactors factor_horizontal(const FatMorphism& f)
{
    const MonotoneMap& b = f.bot();
    if (!b.is_mono()) {
        throw Error("factor_horizontal: the bottom map must be a monomorphism");
    }
    const FatObject& cod = f.cod();
    const Pullback pb = pullback_along_mono(b, cod.eta());

    // The pullback is the union of the fibres of the codomain over image(b).
    {
        int k = 0;
        for (int y = 0; y <= b.dom_size(); ++y) {
            for (int x = cod.ip(b(y)); x <= cod.ep(b(y)); ++x, ++k) {
                if (k > pb.dom_size || pb.to_m(k) != x || pb.to_n(k) != y) {
                    throw Error("factor_horizontal: pullback is not a union of fibres");
                }
            }
        }
        if (k != pb.dom_size + 1) {
            throw Error("factor_horizontal: pullback is not a union of fibres");
        }
    }

    const FatObject mu(pb.to_n);
    std::vector<int> top1;
    top1.reserve(f.top().images().size());
    for (int y : f.top().images()) {
        const auto& img = pb.to_m.images();
        top1.push_back(static_cast<int>(std::lower_bound(img.begin(), img.end(), y) - img.begin()));
    }
    const FatMorphism g1(f.dom(), mu, MonotoneMap(f.dom().m(), mu.m(), std::move(top1)),
                         MonotoneMap::identity(mu.n()));
    VerticalFactors vf = factor_vertical(g1);

    HorizontalFactors out;
    out.phi = std::move(vf.phi);
    out.nu = std::move(vf.nu);
    for (int c : mono_to_faces(b)) {
        out.delta.push_back(Letter::s(c));
    }

    const FatObject z = word_cod(mu, out.delta);
    std::vector<int> top2;
    top2.reserve(static_cast<size_t>(z.m() + 1));
    for (int x = 0; x <= z.m(); ++x) {
        const int c = z.eta()(x);
        top2.push_back(cod.ip(c) + (x - z.ip(c)));
    }
    const FatMorphism omega(z, cod, MonotoneMap(z.m(), cod.m(), std::move(top2)),
                            MonotoneMap::identity(cod.n()));
    VerticalFactors wf = factor_vertical(omega);
    out.psi = std::move(wf.phi);
    out.tau = std::move(wf.nu);
    return out;
}

NormalForm factor_full(const FatMorphism& f)
{
    if (f.dom().is_empty()) {
        throw Error("factor_full: the empty object has no factorization");
    }
    const EpiMono em = epi_mono_factor(f.bot());
    NormalForm nf;
    nf.anchor = f.dom();
    for (int i : epi_to_degeneracies(em.epi)) {
        nf.sigma.push_back(Letter::d(i));
    }
    const FatObject mid(compose_maps(em.epi, f.dom().eta()));
    HorizontalFactors hf = factor_horizontal(FatMorphism(mid, f.cod(), f.top(), em.mono));
    nf.phi = std::move(hf.phi);
    nf.nu = std::move(hf.nu);
    nf.delta = std::move(hf.delta);
    nf.psi = std::move(hf.psi);
    nf.tau = std::move(hf.tau);
    return nf;
}

Ternary ternary_factor(const FatMorphism& f)
{
    const NormalForm nf = factor_full(f);
    FatMorphism d = eval_letters(nf.anchor, nf.sigma);
    std::vector<Letter> vert = nf.phi;
    append(vert, nf.nu);
    FatMorphism v = eval_letters(d.cod(), vert);
    std::vector<Letter> hor = nf.delta;
    append(hor, nf.psi);
    append(hor, nf.tau);
    FatMorphism h = eval_letters(v.cod(), hor);
    return {std::move(d), std::move(v), std::move(h)};
}

ActiveInertFat active_inert_factor_fat(const FatMorphism& f)
{
    const ActiveInert ai = active_inert_factor(f.top());
    FatMorphism active = cocartesian_lift(f.dom(), ai.active);
    const FatObject& mid = active.cod();
    std::vector<int> bot;
    bot.reserve(static_cast<size_t>(mid.n() + 1));
    for (int y = 0; y <= mid.n(); ++y) {
        bot.push_back(f.cod().eta()(ai.inert(mid.ip(y))));
    }
    FatMorphism inert(mid, f.cod(), ai.inert, MonotoneMap(mid.n(), f.cod().n(), std::move(bot)));
    return {std::move(active), std::move(inert)};
}

} // namespace fatdelta
