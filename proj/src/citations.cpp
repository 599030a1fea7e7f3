#include "treeramsey/citations.hpp"

namespace treeramsey {

namespace {

constexpr Citation kCatalog[] = {
    {"eq1.1",
     "ex(p;P_n) = k*binom(n-1,2) + binom(r,2) = ((n-2)p - r(n-1-r))/2 for p = k(n-1)+r, "
     "0 <= r <= n-2, p >= n"},
    {"eq1.2",
     "r(K_{1,m-1},K_{1,n-1}) = m+n-3 if m and n are both odd, else m+n-2 (m,n >= 3)"},
    {"eq1.3",
     "r(T_m',T_n') for n >= m >= 5: m+n-3 if m-1 | n-3; m+n-5 if m = n even; "
     "else m+n-4"},
    {"eq1.4", "r(K_{1,m-1},T_n') for n > m >= 4: m+n-3 if 2 | m(n-1), else m+n-4"},
    {"eq1.5", "r(P_n,T_n*) = r(T_n',T_n*) = r(T_n*,T_n*) = 2n-5 for n >= 8"},
    {"eq1.6", "r(K_{1,m-1},T_n*) for n > m >= 7: m+n-3 if m-1 | n-3, else m+n-4"},
    {"eq1.7",
     "r(G_m,T_n*) for G_m in {P_m,T_m',T_m*}, m >= 7, n >= (m-3)^2+2: "
     "m+n-3 if m-1 | n-3, else m+n-4"},
    {"lemma2.1",
     "if p >= max of the two orders and ex(p;G_1)+ex(p;G_2) < binom(p,2), "
     "then r(G_1,G_2) <= p"},
    {"lemma2.2", "a k-regular graph of order p >= k+1 exists if and only if 2 | kp"},
    {"lemma2.3",
     "with d1 = max degree of G_1, d2 = max degree of G_2 (both >= 2): "
     "(i) r >= d1+d2 - [(d1-1)(d2-1) odd]; "
     "(ii) if G_1 is connected of order m and d1 < d2 <= m then r >= 2d2-1; "
     "(iii) if G_1 is connected of order m, d2 > m, and 2 | (d1+d2-m) or d1 != m-1 "
     "or G_2 has a max-degree vertex with another vertex at distance 3, then r >= d1+d2"},
    {"lemma2.4", "ex(p;K_{1,n-1}) = floor((n-2)p/2) for p >= n-1 >= 1"},
    {"lemma2.5",
     "ex(p;T_n') for p >= n >= 5 with r = p mod (n-1): floor(((n-2)(p-1)-r-1)/2) "
     "if n >= 7 and 2 <= r <= n-4, else ((n-2)p - r(n-1-r))/2"},
    {"lemma2.6",
     "ex(p;T_n*) for p >= n >= 6 with r = p mod (n-1) in {0,1,n-5,n-4,n-3,n-2}: "
     "(n-2)(p-2)/2 + 1 if n > 6 and r = n-5, else ((n-2)p - r(n-1-r))/2"},
    {"lemma2.7",
     "ex(p;T_n*) for p >= n >= 11, 2 <= r <= n-6 (r = p mod (n-1)), "
     "t = (n-3) mod (r+2): floor(((n-2)(p-1)-2r-t-3)/2) if r >= 4 and 2 <= t <= r-1, "
     "else ((n-2)(p-1)-t(r+2-t)-r-1)/2"},
    {"lemma2.8",
     "ex(p;T_n*) for p >= n, 6 <= n <= 10 with r = p mod (n-1): for n in {6,7} the "
     "value ((n-2)p - r(n-1-r))/2; for n in {8,9} the same unless r = n-5 where it is "
     "(n-2)(p-2)/2+1; for n = 10, 4p - r(9-r)/2 except 4p-7 when r = 5 and 4p-9 "
     "when r = 4"},
    {"lemma2.9",
     "for p >= m >= 5 and T_m in {P_m,K_{1,m-1},T_m',T_m*}: ex(p;T_m) <= (m-2)p/2; "
     "if moreover m-1 does not divide p and T_m in {P_m,T_m',T_m*}, then "
     "ex(p;T_m) <= (m-2)(p-1)/2"},
    {"lemma2.10",
     "for m,n >= 5, G_m connected of order m: if m+n-5 = (m-1)x+(m-2)y with x,y >= 0 "
     "then r(G_m,T_n) >= m+n-4 for T_n in {K_{1,n-1},T_n',T_n*}; "
     "witness xK_{m-1} union yK_{m-2}"},
    {"lemma2.11",
     "if gcd(a,b) = 1 and n >= (a-1)(b-1), then n = ax+by for some integers x,y >= 0"},
    {"eq2.1",
     "ex(p;T_n) >= e(kK_{n-1} union K_r) = ((n-2)p - r(n-1-r))/2 = ex(p;P_n) for every "
     "tree T_n of order n"},
    {"lemma3.1",
     "for n >= 6 and G_n connected of order n with ex(2n-5;G_n) < n^2-5n+4: "
     "r(G_n,T_n*) = 2n-5; lower witness 2K_{n-3}"},
    {"thm3.1", "r(P_n,T_n*) = r(T_n',T_n*) = r(T_n*,T_n*) = 2n-5 for n >= 8"},
    {"remark3.1", "r(K_{1,n-1},T_n*) = 2n-3 for n >= 4"},
    {"thm4.1",
     "for n > m >= 5 with m-1 | n-3 and G_m in {P_m,K_{1,m-1},T_m',T_m*} (or G_m "
     "connected with ex(m+n-3;G_m) <= (m-2)(m+n-3)/2): r(G_m,T_n*) = m+n-3; "
     "witness (k+1)K_{m-1} with n-3 = k(m-1)"},
    {"lemma4.1",
     "for n > m >= 7 with m-1 not dividing n-3 and G_m in {P_m,K_{1,m-1},T_m',T_m*} "
     "(or connected with ex(m+n-4;G_m) <= (m-2)(m+n-4)/2): r(G_m,T_n*) <= m+n-4"},
    {"thm4.2",
     "for n > m >= 7 with m-1 not dividing n-3 and G_m in {P_m,T_m',T_m*} (or "
     "connected with ex(m+n-4;G_m) <= (m-2)(m+n-4)/2): if m+n-5 = (m-1)x+(m-2)y "
     "with x,y >= 0 then r(G_m,T_n*) = m+n-4"},
    {"thm4.3",
     "with n = k(m-1)+b = q(m-2)+a, a in {0..m-3}, b in {0..m-2} minus {3}, "
     "n > m >= 7: any of (i) b in {1,2,4}; (ii) b = 0 and k >= 3; "
     "(iii) n >= (m-3)^2+2; (iv) n >= m^2-1-b(m-2); (v) a >= 3 and "
     "n >= (a-4)(m-1)+4 gives r(G_m,T_n*) = m+n-4 under the thm4.2 hypotheses"},
    {"thm4.4",
     "for n > m >= 7 with m-1 not dividing n-3: r(K_{1,m-1},T_n*) = m+n-4; "
     "r(T_m',T_{m+3}*) = r(T_m*,T_{m+3}*) = 2m-1; r(T_m',T_n*) = m+n-4 or m+n-5; "
     "m+n-6 <= r(T_m*,T_n*) <= m+n-4"},
    {"thm4.5",
     "for n > m >= 7, n = k(m-1)+b with b != 3 and (m-b)/2 <= k <= m+2-b, G_m in "
     "{P_m,T_m*} (or connected with ex(m+n-4;G_m) <= (m-2)(m+n-4)/2): "
     "r(G_m,T_n*) = m+n-4 or m+n-5; witness (2k+b-m)K_{m-2} union (m+2-b-k)K_{m-3}"},
    {"remark4.1",
     "any tree T_m (m >= 6) having a vertex adjacent to at least floor((m-1)/2) leaves "
     "satisfies ex(p;T_m) <= (m-2)p/2, so it qualifies as G_m in lemma4.1 and "
     "thm4.1-thm4.3, thm4.5"},
    {"thm5.1",
     "for n > m >= 6 with m-1 | n-3 and G_m in {P_m,T_m*} (or connected with "
     "ex(m+n-3;G_m) <= ((m-2)(m+n-3)+m+n-4)/2): r(G_m,T_n') = m+n-3; "
     "witness (k+1)K_{m-1} with n-3 = k(m-1)"},
    {"lemma5.1",
     "for n > m >= 6 with m-1 not dividing n-3 and G_m in {P_m,T_m*} (or connected "
     "with ex(m+n-4;G_m) < (m-2)(m+n-4)/2): r(G_m,T_n') <= m+n-4"},
    {"thm5.2",
     "for n > m >= 6 with m-1 not dividing n-3: r(T_m*,T_{m+1}') = 2m-3; "
     "r(T_m*,T_n') = m+n-4 or m+n-5 for n >= m+3; and if m+n-5 = (m-1)x+(m-2)y with "
     "x,y >= 0 then r(G_m,T_n') = m+n-4 for G_m in {P_m,T_m*} (or connected with "
     "ex(m+n-4;G_m) < (m-2)(m+n-4)/2)"},
    {"thm5.3",
     "the five thm4.3 conditions (with b != 3) give r(G_m,T_n') = m+n-4 for "
     "n > m >= 6 and G_m in {P_m,T_m*} (or certified connected)"},
    {"thm6.1",
     "for n >= m >= 3 with m-1 not dividing n-2, a = n mod (m-2) in {2..m-3}, "
     "n >= (a-3)(m-1)+3 and T_m a non-star tree: r(T_m,K_{1,n-1}) = m+n-3; "
     "witness (a-2)K_{m-1} union (q-(a-3))K_{m-2} with q = (n-a)/(m-2)"},
    {"thm6.2",
     "for n > m >= 5 with m-1 not dividing n-2: r(T_m*,K_{1,n-1}) = m+n-3 or m+n-4; "
     "if m+n-4 = (m-1)x+(m-2)y+2(m-3)z with x,y,z >= 0 then r(T_m*,K_{1,n-1}) = "
     "m+n-3; witness xK_{m-1} union yK_{m-2} union zK_{m-3,m-3}"},
    {"prop6.1",
     "for m >= 3 with m-1 | n-2 and T_m any tree of order m: r(T_m,K_{1,n-1}) = "
     "m+n-2; witness ((n-2)/(m-1)+1)K_{m-1}"},
    {"prop6.2",
     "for m >= 3, n = k(m-1)+b with b in {0..m-2} minus {2}, and T_m a non-star "
     "tree: r(T_m,K_{1,n-1}) <= m+n-3; if k >= m-b the bound is attained"},
    {"conj2.1",
     "conjectured: ex(p;T_n) <= ex(p;T_n*) for p >= n >= 5 and every tree T_n of "
     "order n other than K_{1,n-1} and T_n'"},
    {"conj2.2",
     "conjectured: alpha_2(T_n^(1)) < alpha_2(T_n^(2)) implies ex(p;T_n^(1)) <= "
     "ex(p;T_n^(2)) for trees of equal order n >= 5, p >= n"},
    {"conj3.1",
     "conjectured: r(T_n,T_n*) = 2n-5 for n >= 8 and every tree T_n of order n "
     "other than K_{1,n-1}"},
    {"trivial",
     "r(G_m,T_n) >= max(m,n): on max(m,n)-1 vertices color everything red if m >= n "
     "(no blue edge at all, too few vertices for G_m), else everything blue; "
     "for m = 2, r(P_2,T_n) = n exactly"},
};

}  // namespace

std::span<const Citation> citation_catalog() { return kCatalog; }

const Citation* find_citation(const std::string& id) {
    for (const Citation& c : kCatalog) {
        if (id == c.id) return &c;
    }
    return nullptr;
}

}  // namespace treeramsey
