#include "gx/simplicial.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace gx {

namespace {

void validate_vertex_name(const std::string& n) {
    if (n.empty()) throw std::invalid_argument("empty vertex name");
    for (char c : n)
        if (c == ',' || c == '#' || std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument("vertex name contains a reserved character: " + n);
}

}  // namespace

std::shared_ptr<const OrderedComplex> OrderedComplex::build(std::string name, std::vector<std::string> vertices,
                                                            const std::vector<Simplex>& simplices) {
    auto x = std::shared_ptr<OrderedComplex>(new OrderedComplex());
    x->name_ = std::move(name);
    x->vertex_names_ = std::move(vertices);
    for (size_t i = 0; i < x->vertex_names_.size(); ++i) {
        validate_vertex_name(x->vertex_names_[i]);
        auto [it, fresh] = x->vertex_index_.emplace(x->vertex_names_[i], static_cast<int>(i));
        if (!fresh) throw std::invalid_argument("duplicate vertex " + x->vertex_names_[i]);
    }

    const int nv = x->vertex_count();
    std::vector<std::map<Simplex, int>> seen(1);
    // every declared vertex is a 0-simplex
    for (int v = 0; v < nv; ++v) seen[0].emplace(Simplex{v}, 0);

    // close under faces: insert all nonempty subsets of every listed simplex
    for (const auto& s : simplices) {
        if (s.empty()) throw std::invalid_argument("empty simplex");
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= nv) throw std::invalid_argument("vertex index out of range in simplex");
            if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument("simplex tuple not strictly increasing");
        }
        const int k = static_cast<int>(s.size());
        if (static_cast<int>(seen.size()) < k) seen.resize(k);
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            Simplex f;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) f.push_back(s[i]);
            seen[f.size() - 1].emplace(std::move(f), 0);
        }
    }

    x->simplices_.resize(seen.size());
    x->index_.resize(seen.size());
    for (size_t d = 0; d < seen.size(); ++d) {
        for (auto& [s, unused] : seen[d]) x->simplices_[d].push_back(s);
        for (size_t i = 0; i < x->simplices_[d].size(); ++i) x->index_[d].emplace(x->simplices_[d][i], static_cast<int>(i));
    }
    return x;
}

int OrderedComplex::vertex_index(const std::string& name) const {
    auto it = vertex_index_.find(name);
    return it == vertex_index_.end() ? -1 : it->second;
}

const std::vector<Simplex>& OrderedComplex::simplices(int dim) const {
    static const std::vector<Simplex> empty;
    if (dim < 0 || dim > top_dim()) return empty;
    return simplices_[dim];
}

int OrderedComplex::index_of(const Simplex& s) const {
    const int d = static_cast<int>(s.size()) - 1;
    if (d < 0 || d > top_dim()) return -1;
    auto it = index_[d].find(s);
    return it == index_[d].end() ? -1 : it->second;
}

std::string OrderedComplex::simplex_to_string(const Simplex& s) const {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += vertex_names_[s[i]];
    }
    return out + "}";
}

void SignedChain::add(int idx, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(idx, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SignedChain::set(int idx, const Int& c) {
    if (c == 0)
        terms_.erase(idx);
    else
        terms_[idx] = c;
}

SignedChain SignedChain::boundary() const {
    SignedChain out(cx_, degree_ - 1);
    if (degree_ <= 0) return out;
    for (const auto& [idx, coeff] : terms_) {
        const Simplex& s = cx_->simplex(degree_, idx);
        int sign = 1;
        for (size_t i = 0; i < s.size(); ++i) {
            Simplex f;
            for (size_t j = 0; j < s.size(); ++j)
                if (j != i) f.push_back(s[j]);
            out.add(cx_->index_of(f), sign * coeff);
            sign = -sign;
        }
    }
    return out;
}

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<int> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)) {
    if (static_cast<int>(vertex_map_.size()) != source_->vertex_count())
        throw std::invalid_argument("simplicial map: vertex map size mismatch");
    for (int v : vertex_map_)
        if (v < 0 || v >= target_->vertex_count())
            throw std::invalid_argument("simplicial map: vertex image out of range");
    for (int d = 0; d <= source_->top_dim(); ++d)
        for (const auto& s : source_->simplices(d)) {
            Simplex img = image_tuple(s);
            for (size_t i = 1; i < img.size(); ++i)
                if (img[i] < img[i - 1])
                    throw std::invalid_argument("simplicial map: vertex images decrease on " +
                                                source_->simplex_to_string(s));
            Simplex distinct = img;
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            if (!target_->has_simplex(distinct))
                throw std::invalid_argument("simplicial map: image does not span a simplex for " +
                                            source_->simplex_to_string(s));
        }
}

Simplex SimplicialMap::image_tuple(const Simplex& s) const {
    Simplex img;
    img.reserve(s.size());
    for (int v : s) img.push_back(vertex_map_[v]);
    return img;
}

bool SimplicialMap::nondegenerate_on(const Simplex& s) const {
    Simplex img = image_tuple(s);
    for (size_t i = 1; i < img.size(); ++i)
        if (img[i] == img[i - 1]) return false;
    return true;
}

namespace {

[[noreturn]] void parse_error(int line, const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::shared_ptr<const OrderedComplex> parse_complex(const std::string& text) {
    std::string name;
    bool have_header = false;
    std::vector<std::string> vertices;
    std::unordered_map<std::string, int> vidx;
    std::vector<Simplex> simplices;
    struct RawCycleLine {
        int line;
        OrderedComplex::RawChain terms;
    };
    std::vector<RawCycleLine> cycles;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "complex") {
            if (toks.size() != 2) parse_error(lineno, "malformed line: expected 'complex <name>'");
            if (have_header) parse_error(lineno, "malformed line: repeated complex header");
            name = toks[1];
            have_header = true;
        } else if (kw == "vertex") {
            if (!have_header) parse_error(lineno, "malformed line: vertex before complex header");
            if (toks.size() != 2) parse_error(lineno, "malformed line: expected 'vertex <id>'");
            if (vidx.count(toks[1])) parse_error(lineno, "duplicate vertex " + toks[1]);
            vidx.emplace(toks[1], static_cast<int>(vertices.size()));
            vertices.push_back(toks[1]);
        } else if (kw == "simplex") {
            if (!have_header) parse_error(lineno, "malformed line: simplex before complex header");
            if (toks.size() < 2) parse_error(lineno, "malformed line: expected 'simplex <id> ...'");
            Simplex s;
            for (size_t i = 1; i < toks.size(); ++i) {
                auto it = vidx.find(toks[i]);
                if (it == vidx.end()) parse_error(lineno, "unknown vertex " + toks[i]);
                s.push_back(it->second);
            }
            for (size_t i = 1; i < s.size(); ++i)
                if (s[i] <= s[i - 1]) parse_error(lineno, "non-increasing tuple");
            simplices.push_back(std::move(s));
        } else if (kw == "cycle") {
            if (!have_header) parse_error(lineno, "malformed line: cycle before complex header");
            if (toks.size() < 2) parse_error(lineno, "malformed line: expected 'cycle <sign><id,...> ...'");
            OrderedComplex::RawChain terms;
            for (size_t i = 1; i < toks.size(); ++i) {
                const std::string& t = toks[i];
                if (t.size() < 2 || (t[0] != '+' && t[0] != '-')) parse_error(lineno, "malformed cycle term " + t);
                int sign = (t[0] == '+') ? 1 : -1;
                Simplex s;
                for (const auto& id : split_on(t.substr(1), ',')) {
                    auto it = vidx.find(id);
                    if (it == vidx.end()) parse_error(lineno, "unknown vertex " + id);
                    s.push_back(it->second);
                }
                for (size_t j = 1; j < s.size(); ++j)
                    if (s[j] <= s[j - 1]) parse_error(lineno, "non-increasing tuple");
                terms.emplace_back(sign, std::move(s));
            }
            cycles.push_back({lineno, std::move(terms)});
        } else {
            parse_error(lineno, "malformed line: unknown keyword " + kw);
        }
    }
    if (!have_header) throw std::invalid_argument("missing complex header");

    auto built = OrderedComplex::build(name, vertices, simplices);
    // attach cycles; tuples must exist in the closed complex
    auto mutable_x = std::const_pointer_cast<OrderedComplex>(built);
    for (auto& c : cycles) {
        for (auto& [sign, s] : c.terms)
            if (!built->has_simplex(s)) parse_error(c.line, "cycle term is not a simplex of the complex");
        mutable_x->attached_cycles_.push_back(std::move(c.terms));
    }
    return built;
}

std::string emit_complex(const OrderedComplex& x) {
    std::ostringstream out;
    out << "complex " << x.name() << "\n";
    for (int v = 0; v < x.vertex_count(); ++v) out << "vertex " << x.vertex_name(v) << "\n";

    // list maximal simplices of dimension >= 1; closure restores the rest
    for (int d = 1; d <= x.top_dim(); ++d) {
        for (const auto& s : x.simplices(d)) {
            bool maximal = true;
            if (d < x.top_dim()) {
                for (const auto& t : x.simplices(d + 1)) {
                    if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                        maximal = false;
                        break;
                    }
                }
            }
            if (!maximal) continue;
            out << "simplex";
            for (int v : s) out << " " << x.vertex_name(v);
            out << "\n";
        }
    }
    for (const auto& cyc : x.attached_cycles()) {
        out << "cycle";
        for (const auto& [sign, s] : cyc) {
            out << " " << (sign > 0 ? "+" : "-");
            for (size_t i = 0; i < s.size(); ++i) {
                if (i) out << ",";
                out << x.vertex_name(s[i]);
            }
        }
        out << "\n";
    }
    return out.str();
}

IntMat coboundary_matrix(const OrderedComplex& x, int k) {
    if (k < 0) throw std::invalid_argument("coboundary degree must be nonnegative");
    const int nk = x.simplex_count(k);
    const int nk1 = x.simplex_count(k + 1);
    IntMat m(nk1, nk);
    for (int r = 0; r < nk1; ++r) {
        const Simplex& s = x.simplex(k + 1, r);
        int sign = 1;
        for (size_t i = 0; i < s.size(); ++i) {
            Simplex f;
            for (size_t j = 0; j < s.size(); ++j)
                if (j != i) f.push_back(s[j]);
            m.at(r, x.index_of(f)) = sign;
            sign = -sign;
        }
    }
    return m;
}

SignedChain fundamental_cycle(const ComplexPtr& x) {
    const int n = x->top_dim();
    if (n < 0) throw std::invalid_argument("fundamental cycle of an empty complex");

    for (const auto& raw : x->attached_cycles()) {
        if (raw.empty() || static_cast<int>(raw.front().second.size()) != n + 1) continue;
        SignedChain c(x, n);
        for (const auto& [sign, s] : raw) {
            int idx = x->index_of(s);
            if (idx < 0 || static_cast<int>(s.size()) != n + 1)
                throw std::invalid_argument("attached cycle has a term of wrong dimension");
            c.add(idx, sign);
        }
        if (!c.boundary().is_zero()) throw std::invalid_argument("attached cycle has nonzero boundary");
        return c;
    }

    const int nt = x->simplex_count(n);
    // face -> incidences (top simplex, face position)
    std::map<Simplex, std::vector<std::pair<int, int>>> incidence;
    for (int t = 0; t < nt; ++t) {
        const Simplex& s = x->simplex(n, t);
        for (size_t i = 0; i < s.size(); ++i) {
            Simplex f;
            for (size_t j = 0; j < s.size(); ++j)
                if (j != i) f.push_back(s[j]);
            incidence[f].push_back({t, static_cast<int>(i)});
        }
    }
    // every (n-1)-simplex must lie in exactly two top simplices
    for (int i = 0; i < x->simplex_count(n - 1); ++i) {
        const Simplex& f = x->simplex(n - 1, i);
        auto it = incidence.find(f);
        const size_t cnt = (it == incidence.end()) ? 0 : it->second.size();
        if (cnt != 2)
            throw std::invalid_argument("not a closed pseudo-manifold: face " + x->simplex_to_string(f) +
                                        " lies in " + std::to_string(cnt) + " top simplices");
    }

    std::vector<int> sign(nt, 0);
    sign[0] = 1;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int t = bfs.front();
        bfs.pop();
        const Simplex& s = x->simplex(n, t);
        for (size_t i = 0; i < s.size(); ++i) {
            Simplex f;
            for (size_t j = 0; j < s.size(); ++j)
                if (j != i) f.push_back(s[j]);
            const auto& inc = incidence[f];
            for (const auto& [t2, i2] : inc) {
                if (t2 == t) continue;
                // coefficients must cancel on the shared face
                int needed = -sign[t] * (((i + i2) % 2 == 0) ? 1 : -1);
                if (sign[t2] == 0) {
                    sign[t2] = needed;
                    bfs.push(t2);
                } else if (sign[t2] != needed) {
                    throw std::invalid_argument("complex is not orientable");
                }
            }
        }
    }
    for (int t = 0; t < nt; ++t)
        if (sign[t] == 0) throw std::invalid_argument("top-dimensional simplices are not connected");

    SignedChain c(x, n);
    for (int t = 0; t < nt; ++t) c.add(t, sign[t]);
    if (!c.boundary().is_zero()) throw std::logic_error("propagated fundamental cycle has nonzero boundary");
    return c;
}

Subdivision barycentric_subdivision(const ComplexPtr& x) {
    // X' vertices: simplices of X ordered by (dimension, vertex tuple)
    std::vector<std::pair<int, int>> verts;  // (dim, index)
    for (int d = 0; d <= x->top_dim(); ++d)
        for (int i = 0; i < x->simplex_count(d); ++i) verts.push_back({d, i});

    std::map<std::pair<int, int>, int> vert_index;
    std::vector<std::string> names;
    for (size_t i = 0; i < verts.size(); ++i) {
        vert_index[verts[i]] = static_cast<int>(i);
        const auto& [d, idx] = verts[i];
        const Simplex& s = x->simplex(d, idx);
        if (d == 0) {
            names.push_back(x->vertex_name(s[0]));
        } else {
            std::string n = "(";
            for (size_t j = 0; j < s.size(); ++j) {
                if (j) n += ".";
                n += x->vertex_name(s[j]);
            }
            names.push_back(n + ")");
        }
    }

    // simplices of X': flags of proper inclusions, generated per top face
    std::vector<Simplex> flags;
    for (int d = 0; d <= x->top_dim(); ++d)
        for (int i = 0; i < x->simplex_count(d); ++i) {
            const Simplex& s = x->simplex(d, i);
            const int k = static_cast<int>(s.size());
            // chains of proper subsets ending in s itself
            std::vector<std::vector<unsigned>> stack = {{(1u << k) - 1}};
            while (!stack.empty()) {
                auto chain = std::move(stack.back());
                stack.pop_back();
                Simplex flag;
                for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
                    Simplex f;
                    for (int b = 0; b < k; ++b)
                        if (*it & (1u << b)) f.push_back(s[b]);
                    flag.push_back(vert_index.at({static_cast<int>(f.size()) - 1, x->index_of(f)}));
                }
                std::sort(flag.begin(), flag.end());
                flags.push_back(flag);
                unsigned last = chain.back();
                for (unsigned sub = (last - 1) & last; sub != 0; sub = (sub - 1) & last) {
                    auto next = chain;
                    next.push_back(sub);
                    stack.push_back(std::move(next));
                }
            }
        }

    Subdivision out;
    out.complex = OrderedComplex::build(x->name() + "'", names, flags);
    for (const auto& [d, i] : verts) {
        out.vertex_to_simplex_dim.push_back(d);
        out.vertex_to_simplex_idx.push_back(i);
    }
    // canonical projection: barycenter -> greatest vertex of its simplex
    std::vector<int> vm;
    for (const auto& [d, i] : verts) vm.push_back(x->simplex(d, i).back());
    out.projection = std::make_shared<SimplicialMap>(out.complex, x, std::move(vm));
    return out;
}

}  // namespace gx
