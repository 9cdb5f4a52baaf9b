#include "disim/hdigraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace disim {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace

HDigraph::HDigraph(const Digraph& d) {
    const int n = d.vertex_count();
    alive_.assign(n, 1);
    live_ = n;
    live_arcs_ = d.arc_count();
    sides_.resize(2 * static_cast<size_t>(n));

    int slots = 0;
    for (int v = 0; v < n; ++v) {
        Side& so = side(v, Dir::out);
        so.deg = so.init_deg = d.out_deg(v);
        so.base = slots;
        slots += so.init_deg;
        Side& si = side(v, Dir::in);
        si.deg = si.init_deg = d.in_deg(v);
        si.base = slots;
        slots += si.init_deg;
    }
    bfirst_.assign(slots, -1);
    blast_.assign(slots, -1);
    bprev_.assign(slots, -1);
    bnext_.assign(slots, -1);

    ent_.reserve(2 * static_cast<size_t>(d.arc_count()));
    for (int v = 0; v < n; ++v) {
        for (int w : d.out(v)) {
            int eo = static_cast<int>(ent_.size());
            ent_.push_back({w, eo + 1});
            ent_.push_back({v, eo});
            // file w in v's out side, keyed by in_deg(w)
            Side& so = side(v, Dir::out);
            int kw = d.in_deg(w);
            link_entry(so, kw < so.deg ? kw : -1, eo);
            // file v in w's in side, keyed by out_deg(v)
            Side& si = side(w, Dir::in);
            int kv = d.out_deg(v);
            link_entry(si, kv < si.deg ? kv : -1, eo + 1);
        }
    }
    // thread the nonempty buckets of each side in ascending key order
    for (Side& s : sides_) {
        int prev = -1;
        for (int k = 0; k < s.init_deg; ++k) {
            if (bfirst_[s.base + k] == -1) continue;
            attach_bucket_after(s, k, prev);
            prev = k;
        }
    }
}

void HDigraph::link_entry(Side& s, int key, int e) {
    int *first, *last;
    if (key < 0) {
        first = &s.h_first;
        last = &s.h_last;
    } else {
        first = &bfirst_[s.base + key];
        last = &blast_[s.base + key];
    }
    ent_[e].prev = *last;
    ent_[e].next = -1;
    if (*last != -1)
        ent_[*last].next = e;
    else
        *first = e;
    *last = e;
}

void HDigraph::unlink_entry(Side& s, int key, int e) {
    int *first, *last;
    if (key < 0) {
        first = &s.h_first;
        last = &s.h_last;
    } else {
        first = &bfirst_[s.base + key];
        last = &blast_[s.base + key];
    }
    Ent& x = ent_[e];
    if (x.prev != -1)
        ent_[x.prev].next = x.next;
    else
        *first = x.next;
    if (x.next != -1)
        ent_[x.next].prev = x.prev;
    else
        *last = x.prev;
    x.prev = x.next = -1;
    if (key >= 0 && *first == -1) detach_bucket(s, key);
}

void HDigraph::attach_bucket_after(Side& s, int key, int after) {
    int si = s.base + key;
    bprev_[si] = after;
    if (after == -1) {
        bnext_[si] = s.first_bucket;
        if (s.first_bucket != -1)
            bprev_[s.base + s.first_bucket] = key;
        else
            s.last_bucket = key;
        s.first_bucket = key;
    } else {
        int ai = s.base + after;
        bnext_[si] = bnext_[ai];
        if (bnext_[ai] != -1)
            bprev_[s.base + bnext_[ai]] = key;
        else
            s.last_bucket = key;
        bnext_[ai] = key;
    }
}

void HDigraph::detach_bucket(Side& s, int key) {
    int si = s.base + key;
    if (bprev_[si] != -1)
        bnext_[s.base + bprev_[si]] = bnext_[si];
    else
        s.first_bucket = bnext_[si];
    if (bnext_[si] != -1)
        bprev_[s.base + bnext_[si]] = bprev_[si];
    else
        s.last_bucket = bprev_[si];
    bprev_[si] = bnext_[si] = -1;
}

void HDigraph::merge_tail_bucket_into_h(Side& s, int key) {
    if (key < 0 || key >= s.init_deg || s.last_bucket != key) return;
    int si = s.base + key;
    if (bfirst_[si] == -1) return;
    int bf = bfirst_[si], bl = blast_[si];
    if (s.h_last != -1) {
        ent_[s.h_last].next = bf;
        ent_[bf].prev = s.h_last;
    } else {
        s.h_first = bf;
    }
    s.h_last = bl;
    bfirst_[si] = blast_[si] = -1;
    detach_bucket(s, key);
}

void HDigraph::relocate_after_key_drop(Side& s, int e, int new_key) {
    const int old_key = new_key + 1;
    if (old_key >= s.deg) {
        // was in H
        if (new_key >= s.deg) return;  // still in H
        // exits H; new_key == s.deg - 1, the maximal bucket key
        unlink_entry(s, -1, e);
        if (bfirst_[s.base + new_key] == -1)
            attach_bucket_after(s, new_key, s.last_bucket);
        link_entry(s, new_key, e);
    } else {
        // bucket old_key -> bucket new_key (adjacent)
        int anchor = bprev_[s.base + old_key];
        unlink_entry(s, old_key, e);  // may detach the emptied bucket
        if (bfirst_[s.base + new_key] == -1)
            attach_bucket_after(s, new_key, anchor);
        link_entry(s, new_key, e);
    }
}

int HDigraph::degree(int v, Dir dir) const {
    require(alive_[v], "degree of a dead vertex");
    return side(v, dir).deg;
}

void HDigraph::remove(int v) {
    require(v >= 0 && v < vertex_count() && alive_[v], "remove of a dead vertex");
    for (Dir b : {Dir::out, Dir::in}) {
        const Dir ob = opposite(b);
        const int my_key = side(v, b).deg;  // v's key in neighbor structures
        auto process = [&](int e) {
            const int w = ent_[e].nb;
            if (w == v) return;  // loop, discarded with v
            Side& sw = side(w, ob);
            // drop v's occurrence from w's structure
            unlink_entry(sw, my_key < sw.deg ? my_key : -1, ent_[e].twin);
            --sw.deg;
            const int nk = sw.deg;  // w's new key in its ob-neighbors' sides
            // every occurrence of w that may need to move is the twin of a
            // current H entry of sw
            for (int f = sw.h_first; f != -1; f = ent_[f].next) {
                const int u = ent_[f].nb;
                relocate_after_key_drop(side(u, b), ent_[f].twin, nk);
            }
            merge_tail_bucket_into_h(sw, sw.deg);
            --live_arcs_;
        };
        const Side& sv = side(v, b);
        for (int k = sv.first_bucket; k != -1; k = bnext_[sv.base + k])
            for (int e = bfirst_[sv.base + k]; e != -1; e = ent_[e].next) process(e);
        for (int e = sv.h_first; e != -1; e = ent_[e].next) process(e);
    }
    if (has_loop_entry(v)) --live_arcs_;
    Side& so = side(v, Dir::out);
    Side& si = side(v, Dir::in);
    so.deg = si.deg = 0;
    so.first_bucket = so.last_bucket = so.h_first = so.h_last = -1;
    si.first_bucket = si.last_bucket = si.h_first = si.h_last = -1;
    alive_[v] = 0;
    --live_;
}

bool HDigraph::has_loop_entry(int v) const {
    bool found = false;
    for_each_neighbor(v, Dir::out, [&](int nb) { found |= (nb == v); });
    return found;
}

std::vector<int> HDigraph::min_n(int v, Dir dir) const {
    require(alive_[v], "min_n of a dead vertex");
    const Side& s = side(v, dir);
    require(s.deg > 0, "min_n of an empty neighborhood");
    std::vector<int> r;
    if (s.first_bucket != -1) {
        for (int e = bfirst_[s.base + s.first_bucket]; e != -1; e = ent_[e].next)
            r.push_back(ent_[e].nb);
    } else {
        const Dir od = opposite(dir);
        int best = -1;
        for (int e = s.h_first; e != -1; e = ent_[e].next) {
            int k = side(ent_[e].nb, od).deg;
            if (best == -1 || k < best) {
                best = k;
                r.clear();
            }
            if (k == best) r.push_back(ent_[e].nb);
        }
    }
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<Arc> HDigraph::n_prime(int v, Dir dir) {
    require(alive_[v], "n_prime of a dead vertex");
    if (vmark_.size() != alive_.size()) vmark_.assign(alive_.size(), 0);
    if (amark_.size() != ent_.size()) amark_.assign(ent_.size(), 0);
    ++epoch_;
    std::vector<int> members;
    for_each_neighbor(v, dir, [&](int nb) {
        vmark_[nb] = epoch_;
        members.push_back(nb);
    });
    std::vector<Arc> r;
    for (int z : members) {
        for_each_h(z, Dir::in, [&](int x, int aid) {
            if (vmark_[x] == epoch_ && amark_[aid] != epoch_) {
                amark_[aid] = epoch_;
                r.push_back({x, z});
            }
        });
        for_each_h(z, Dir::out, [&](int y, int aid) {
            if (vmark_[y] == epoch_ && amark_[aid] != epoch_) {
                amark_[aid] = epoch_;
                r.push_back({z, y});
            }
        });
    }
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<int> HDigraph::neighbors(int v, Dir dir) const {
    require(alive_[v], "neighbors of a dead vertex");
    std::vector<int> r;
    for_each_neighbor(v, dir, [&](int nb) { r.push_back(nb); });
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<Arc> HDigraph::live_arcs() const {
    std::vector<Arc> r;
    for (int v = 0; v < vertex_count(); ++v) {
        if (!alive_[v]) continue;
        for_each_neighbor(v, Dir::out, [&](int nb) { r.push_back({v, nb}); });
    }
    std::sort(r.begin(), r.end());
    return r;
}

bool HDigraph::validate(std::string* why) const {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    std::vector<char> seen(alive_.size(), 0);
    for (int v = 0; v < vertex_count(); ++v) {
        for (Dir dir : {Dir::out, Dir::in}) {
            const Side& s = side(v, dir);
            if (!alive_[v]) {
                if (s.first_bucket != -1 || s.h_first != -1)
                    return fail("dead vertex keeps entries");
                continue;
            }
            const Dir od = opposite(dir);
            int count = 0;
            std::vector<int> mine;
            auto check_entry = [&](int e, int key_or_h) -> const char* {
                const int nb = ent_[e].nb;
                if (!alive_[nb]) return "dead neighbor in container";
                if (seen[nb]) return "duplicate neighbor occurrence";
                seen[nb] = 1;
                mine.push_back(nb);
                const int k = side(nb, od).deg;
                if (key_or_h >= 0 && k != key_or_h) return "bucket key mismatch";
                if (key_or_h < 0 && k < s.deg) return "H entry below threshold";
                const int t = ent_[e].twin;
                if (ent_[t].twin != e || ent_[t].nb != v) return "twin link broken";
                ++count;
                return nullptr;
            };
            int prev_key = -1;
            for (int k = s.first_bucket; k != -1; k = bnext_[s.base + k]) {
                if (k <= prev_key) return fail("bucket keys not ascending");
                if (k >= s.deg) return fail("bucket key at or above degree");
                if (bfirst_[s.base + k] == -1) return fail("empty bucket attached");
                if (bprev_[s.base + k] != prev_key) return fail("bucket prev link broken");
                prev_key = k;
                for (int e = bfirst_[s.base + k]; e != -1; e = ent_[e].next)
                    if (const char* err = check_entry(e, k)) return fail(err);
            }
            if (s.last_bucket != prev_key) return fail("bucket tail link broken");
            for (int e = s.h_first; e != -1; e = ent_[e].next)
                if (const char* err = check_entry(e, -1)) return fail(err);
            if (count != s.deg) return fail("degree does not match entry count");
            for (int nb : mine) seen[nb] = 0;
        }
    }
    // coverage: every live arc v->w must sit in H+(v) or H-(w)
    for (int v = 0; v < vertex_count(); ++v) {
        if (!alive_[v]) continue;
        bool ok = true;
        for_each_neighbor(v, Dir::out, [&](int w) {
            bool in_h_out = side(w, Dir::in).deg >= side(v, Dir::out).deg;
            bool in_h_in = side(v, Dir::out).deg >= side(w, Dir::in).deg;
            ok &= (in_h_out || in_h_in);
        });
        if (!ok) return fail("arc not covered by any H set");
    }
    return true;
}

namespace {

struct SideImage {
    int deg;
    std::vector<std::pair<int, std::vector<int>>> buckets;
    std::vector<int> h;

    bool operator==(const SideImage&) const = default;
};

}  // namespace

bool HDigraph::same_contents(const HDigraph& other, std::string* why) const {
    auto image = [](const HDigraph& h, int v, Dir dir) {
        SideImage img;
        const Side& s = h.side(v, dir);
        img.deg = s.deg;
        for (int k = s.first_bucket; k != -1; k = h.bnext_[s.base + k]) {
            std::vector<int> members;
            for (int e = h.bfirst_[s.base + k]; e != -1; e = h.ent_[e].next)
                members.push_back(h.ent_[e].nb);
            std::sort(members.begin(), members.end());
            img.buckets.emplace_back(k, std::move(members));
        }
        for (int e = s.h_first; e != -1; e = h.ent_[e].next)
            img.h.push_back(h.ent_[e].nb);
        std::sort(img.h.begin(), img.h.end());
        return img;
    };
    for (int v = 0; v < vertex_count(); ++v) {
        if (!alive_[v]) continue;
        if (v >= other.vertex_count() || !other.alive_[v]) {
            if (why) *why = "vertex " + std::to_string(v) + " not alive in other";
            return false;
        }
        for (Dir dir : {Dir::out, Dir::in}) {
            if (image(*this, v, dir) != image(other, v, dir)) {
                if (why)
                    *why = "side contents differ at vertex " + std::to_string(v);
                return false;
            }
        }
    }
    return true;
}

std::string HDigraph::dump() const {
    std::ostringstream os;
    for (int v = 0; v < vertex_count(); ++v) {
        if (!alive_[v]) continue;
        os << v << ":";
        for (Dir dir : {Dir::out, Dir::in}) {
            const Side& s = side(v, dir);
            os << (dir == Dir::out ? " out" : " in") << "(d=" << s.deg << ")";
            for (int k = s.first_bucket; k != -1; k = bnext_[s.base + k]) {
                os << " [" << k << ":";
                for (int e = bfirst_[s.base + k]; e != -1; e = ent_[e].next)
                    os << " " << ent_[e].nb;
                os << "]";
            }
            os << " H{";
            for (int e = s.h_first; e != -1; e = ent_[e].next)
                os << " " << ent_[e].nb;
            os << " }";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace disim
