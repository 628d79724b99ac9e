#include "gt/presentation.hpp"

#include "gt/io.hpp"

namespace gt {

GradedPresentation::GradedPresentation(std::string name, AlphabetPtr alphabet, int max_degree)
    : name_(std::move(name)), alpha_(std::move(alphabet)), N_(max_degree), expander_(alpha_, max_degree) {}

TensorElement GradedPresentation::gen(const std::string& symbol) const {
    return TensorElement::generator(alpha_, N_, symbol);
}

void GradedPresentation::add_relation(const TensorElement& lie, const std::string& label) {
    if (lie.is_zero()) return;
    int d = -1;
    for (const auto& [w, c] : lie.terms()) {
        int dw = alpha_->degree(w);
        if (d >= 0 && dw != d) throw InhomogeneousInput("relation " + label + " is not homogeneous");
        d = dw;
    }
    add_relation(expander_.coordinates(lie), d, label);
}

void GradedPresentation::add_relation(const LieCoords& coords, int degree, const std::string& label) {
    if (coords.empty()) return;
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (!components_.empty()) throw std::logic_error("relations must be added before components are computed");
    relations_.push_back({coords, degree, label});
}

void GradedPresentation::add_central(const std::string& symbol) {
    TensorElement g = gen(symbol);
    for (Letter h = 0; h < alpha_->size(); ++h) {
        if (alpha_->name(h) == symbol) continue;
        add_relation(lie_bracket(g, TensorElement::letter(alpha_, N_, h)), "central " + symbol);
    }
}

namespace {
IntRow coords_to_int_row(const LieCoords& coords, const std::map<Word, int>& index, const std::string& what) {
    std::map<int, mpq_class> m;
    for (const auto& [w, c] : coords) {
        auto it = index.find(w);
        if (it == index.end()) throw InhomogeneousInput(what + ": term outside the requested degree");
        m[it->second] += c;
    }
    return to_primitive_int_row(m);
}
}  // namespace

const IntRow& GradedPresentation::bracket_row(Letter g, int col, int d) const {
    auto key = std::make_tuple(g, col, d);
    if (auto it = bracket_cache_.find(key); it != bracket_cache_.end()) return it->second;
    const DegreeComponent& sub = component(d);
    const DegreeComponent& top = component(d + alpha_->degree(g));
    TensorElement br = lie_bracket(TensorElement::letter(alpha_, N_, g), expander_.expand(sub.lyndon[col]));
    LieCoords coords = expander_.coordinates(br);
    IntRow row;
    for (const auto& [w, c] : coords) {
        if (c.get_den() != 1) throw std::logic_error("non-integral Lyndon coordinates");
        row.emplace_back(top.index.at(w), c.get_num());
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return bracket_cache_.emplace(key, std::move(row)).first->second;
}

const DegreeComponent& GradedPresentation::component(int d) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (auto it = components_.find(d); it != components_.end()) return *it->second;
    if (d > N_) throw std::out_of_range("degree " + std::to_string(d) + " exceeds the presentation bound " +
                                        std::to_string(N_));
    auto comp = std::make_unique<DegreeComponent>();
    comp->degree = d;
    if (d >= 1) comp->lyndon = lyndon_words(*alpha_, d);
    for (std::size_t i = 0; i < comp->lyndon.size(); ++i) comp->index.emplace(comp->lyndon[i], static_cast<int>(i));
    comp->ideal = Echelon(static_cast<int>(comp->lyndon.size()));
    DegreeComponent* raw = comp.get();
    // publish the basis before recursing so bracket_row can see it
    components_.emplace(d, std::move(comp));

    for (const Relation& r : relations_)
        if (r.degree == d) raw->ideal.insert(coords_to_int_row(r.coords, raw->index, r.label));

    for (Letter g = 0; g < alpha_->size(); ++g) {
        int dg = alpha_->degree(g);
        if (dg >= d) continue;
        const DegreeComponent& sub = component(d - dg);
        for (const auto& [piv, row] : sub.ideal.pivot_rows()) {
            std::map<int, mpz_class> acc;
            for (const auto& [col, val] : row)
                for (const auto& [c2, v2] : bracket_row(g, col, d - dg)) acc[c2] += val * v2;
            IntRow out;
            for (auto& [c, v] : acc)
                if (sgn(v) != 0) out.emplace_back(c, std::move(v));
            if (!out.empty()) raw->ideal.insert(std::move(out));
        }
    }
    raw->quotient_basis = raw->ideal.free_columns();
    return *raw;
}

std::vector<long long> GradedPresentation::dims(int dmax) const {
    std::vector<long long> out(dmax + 1, 0);
    for (int d = 1; d <= dmax; ++d) out[d] = static_cast<long long>(component(d).quotient_dim());
    return out;
}

RatRow GradedPresentation::to_row(const LieCoords& coords, int d) const {
    const DegreeComponent& comp = component(d);
    std::map<int, mpq_class> m;
    for (const auto& [w, c] : coords) {
        auto it = comp.index.find(w);
        if (it == comp.index.end()) throw InhomogeneousInput("element has terms outside degree " + std::to_string(d));
        m[it->second] += c;
    }
    RatRow row;
    for (auto& [c, v] : m)
        if (sgn(v) != 0) row.emplace_back(c, v);
    return row;
}

RatRow GradedPresentation::to_row(const TensorElement& lie, int d) const { return to_row(expander_.coordinates(lie), d); }

LieCoords GradedPresentation::from_row(const RatRow& row, int d) const {
    const DegreeComponent& comp = component(d);
    LieCoords out;
    for (const auto& [c, v] : row) out.emplace(comp.lyndon.at(c), v);
    return out;
}

RatRow GradedPresentation::normal_form(const TensorElement& lie, int d) const {
    return component(d).ideal.reduce(to_row(lie, d));
}

bool GradedPresentation::is_zero(const TensorElement& lie) const {
    LieCoords coords = expander_.coordinates(lie);
    std::map<int, LieCoords> by_degree;
    for (const auto& [w, c] : coords) by_degree[alpha_->degree(w)].emplace(w, c);
    for (const auto& [d, part] : by_degree)
        if (!component(d).ideal.reduce(to_row(part, d)).empty()) return false;
    return true;
}

std::vector<LieCoords> GradedPresentation::ideal_span(int d) const {
    const DegreeComponent& comp = component(d);
    std::vector<LieCoords> out;
    for (const auto& [piv, row] : comp.ideal.pivot_rows()) {
        LieCoords c;
        for (const auto& [col, v] : row) c.emplace(comp.lyndon[col], Rational(v));
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------- homomorphisms

LieHomomorphism::LieHomomorphism(PresentationPtr source, PresentationPtr target, std::vector<TensorElement> images,
                                 std::string name)
    : src_(std::move(source)), dst_(std::move(target)), images_(std::move(images)), name_(std::move(name)) {
    if (images_.size() != src_->alphabet()->size()) throw std::invalid_argument("image table has the wrong size");
    for (std::size_t g = 0; g < images_.size(); ++g) {
        const TensorElement& im = images_[g];
        if (!same_alphabet(im.alphabet(), dst_->alphabet()) || im.max_degree() != dst_->max_degree())
            throw ContextMismatch("image of " + src_->alphabet()->name(static_cast<Letter>(g)) +
                                  " is not in the target context");
        for (const auto& [w, c] : im.terms())
            if (dst_->alphabet()->degree(w) != src_->alphabet()->degree(static_cast<Letter>(g)))
                throw InhomogeneousInput("image of " + src_->alphabet()->name(static_cast<Letter>(g)) +
                                         " does not preserve degree");
    }
}

const TensorElement& LieHomomorphism::image(const std::string& symbol) const {
    return images_.at(src_->alphabet()->index(symbol));
}

TensorElement LieHomomorphism::apply_lyndon(const Word& w) const {
    std::lock_guard<std::mutex> lock(mu_);
    return evaluate_lyndon<TensorElement>(
        w, [&](Letter l) { return images_[l]; },
        [](const TensorElement& a, const TensorElement& b) { return lie_bracket(a, b); }, memo_);
}

TensorElement LieHomomorphism::apply(const LieCoords& coords) const {
    TensorElement r(dst_->alphabet(), dst_->max_degree());
    for (const auto& [w, c] : coords) r += c * apply_lyndon(w);
    return r;
}

TensorElement LieHomomorphism::apply_tensor(const TensorElement& a) const {
    TensorElement r(dst_->alphabet(), dst_->max_degree());
    for (const auto& [w, c] : a.terms()) {
        TensorElement t = TensorElement::unit(dst_->alphabet(), dst_->max_degree(), c);
        for (Letter l : w) t = product(t, images_[l]);
        r += t;
    }
    return r;
}

LieHomomorphism LieHomomorphism::after(const LieHomomorphism& first) const {
    std::vector<TensorElement> ims;
    for (const auto& im : first.images()) ims.push_back(apply_tensor(im));
    return LieHomomorphism(first.source(), dst_, std::move(ims), name_ + " o " + first.name());
}

CheckResult check_homomorphism(const LieHomomorphism& h, int dmax) {
    for (const Relation& r : h.source()->relations()) {
        if (r.degree > dmax) continue;
        TensorElement im = h.apply(r.coords);
        if (!h.target()->is_zero(im))
            return {false, "relation '" + r.label + "' maps to " + format_element(im) + " (nonzero in " +
                               h.target()->name() + ")"};
    }
    return {};
}

KernelDims kernel_dims(const LieHomomorphism& s, int dmax) {
    KernelDims out;
    out.nullity.assign(dmax + 1, 0);
    out.difference.assign(dmax + 1, 0);
    for (int d = 1; d <= dmax; ++d) {
        const DegreeComponent& src = s.source()->component(d);
        const DegreeComponent& dst = s.target()->component(d);
        Echelon e(static_cast<int>(dst.free_dim()));
        for (int q : src.quotient_basis) {
            RatRow nf = s.target()->normal_form(s.apply_lyndon(src.lyndon[q]), d);
            if (!nf.empty()) e.insert(nf);
        }
        if (e.rank() != dst.quotient_dim())
            throw NotSurjective(s.name() + " is not surjective in degree " + std::to_string(d));
        out.nullity[d] = static_cast<long long>(src.quotient_dim() - e.rank());
        out.difference[d] = static_cast<long long>(src.quotient_dim()) - static_cast<long long>(dst.quotient_dim());
    }
    return out;
}

PresentationPtr quotient_by_derived_ideal(const GradedPresentation& base, const std::string& generator, int dmax,
                                          const std::string& name) {
    auto with_gen = std::make_shared<GradedPresentation>(base.name() + "+J", base.alphabet(), base.max_degree());
    auto result = std::make_shared<GradedPresentation>(name, base.alphabet(), base.max_degree());
    for (const Relation& r : base.relations()) {
        with_gen->add_relation(r.coords, r.degree, r.label);
        result->add_relation(r.coords, r.degree, r.label);
    }
    with_gen->add_relation(with_gen->gen(generator), "ideal generator " + generator);

    const LyndonExpander& ex = base.expander();
    const int gdeg = base.alphabet()->degree(base.alphabet()->index(generator));
    std::map<int, std::vector<TensorElement>> span;
    for (int d = gdeg; d <= dmax; ++d)
        for (const LieCoords& c : with_gen->ideal_span(d)) span[d].push_back(ex.from_coordinates(c));
    for (int d = 2 * gdeg; d <= dmax; ++d)
        for (int a = gdeg; 2 * a <= d; ++a) {
            const int b = d - a;
            const auto& ua = span[a];
            const auto& ub = span[b];
            for (std::size_t i = 0; i < ua.size(); ++i)
                for (std::size_t j = (a == b ? i + 1 : 0); j < ub.size(); ++j) {
                    TensorElement br = lie_bracket(ua[i], ub[j]);
                    if (!br.is_zero()) result->add_relation(ex.coordinates(br), d, "[J,J]");
                }
        }
    return result;
}

}  // namespace gt
