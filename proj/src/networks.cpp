#include "acr/networks.hpp"

namespace acr {

namespace {

struct LayerBuilder {
    int in_dim, out_dim;
    CombineSpec comb;

    LayerBuilder(int in, int out) : in_dim(in), out_dim(out) {
        comb.A.assign(in, Vec(out, Rat(0)));
        comb.C.assign(in, Vec(out, Rat(0)));
        comb.R.assign(in, Vec(out, Rat(0)));
        comb.b.assign(out, Rat(0));
    }

    LayerBuilder& a(int from, int to, Rat w) { comb.A[from][to] = std::move(w); return *this; }
    LayerBuilder& c(int from, int to, Rat w) { comb.C[from][to] = std::move(w); return *this; }
    LayerBuilder& r(int from, int to, Rat w) { comb.R[from][to] = std::move(w); return *this; }
    LayerBuilder& bias(int to, Rat w) { comb.b[to] = std::move(w); return *this; }
    LayerBuilder& carry(int from, int to) { return a(from, to, 1); }

    Layer done() { return Layer{std::move(comb), AggregationSpec::sum_all(),
                                AggregationSpec::sum_all()}; }
};

}  // namespace

AcrGnn build_linear_order_gnn() {
    AcrGnn net;
    net.input_dim = 0;

    // layer 1: four constant-1 dims, one per subnetwork
    {
        LayerBuilder l(0, 4);
        for (int j = 0; j < 4; ++j) l.bias(j, 1);
        net.layers.push_back(l.done());
    }
    // layer 2: (outdeg, n, outdeg, n)
    {
        LayerBuilder l(4, 4);
        l.c(0, 0, 1);  // sum of ones over out-neighbours
        l.r(1, 1, 1);  // sum of ones over V
        l.c(2, 2, 1);
        l.r(3, 3, 1);
        net.layers.push_back(l.done());
    }
    // layer 3: (|E|, C(n,2), paths2(v), n^2, n)
    {
        LayerBuilder l(4, 5);
        l.r(0, 0, 1);                          // |E| = sum of out-degrees
        l.a(1, 1, rat(-1, 2)).r(1, 1, rat(1, 2));  // (n^2 - n)/2
        l.c(2, 2, 1);                          // length-2 paths from v
        l.r(3, 3, 1);                          // n^2
        l.a(3, 4, 1);                          // keep n
        net.layers.push_back(l.done());
    }
    // layer 4: (|E|, C(n,2), hom(P2,G), C(n,3))
    {
        LayerBuilder l(5, 4);
        l.carry(0, 0);
        l.carry(1, 1);
        l.r(2, 2, 1);  // hom = sum of paths2 over V
        l.r(3, 3, rat(1, 6)).a(3, 3, rat(-3, 6)).a(4, 3, rat(2, 6));  // (n^3-3n^2+2n)/6
        net.layers.push_back(l.done());
    }
    // layer 5: ReLU differences of the two pairs
    {
        LayerBuilder l(4, 4);
        l.a(0, 0, 1).a(1, 0, -1);
        l.a(1, 1, 1).a(0, 1, -1);
        l.a(2, 2, 1).a(3, 2, -1);
        l.a(3, 3, 1).a(2, 3, -1);
        net.layers.push_back(l.done());
    }
    // layer 6: their sum; non-positive iff both equalities hold
    {
        LayerBuilder l(4, 1);
        for (int j = 0; j < 4; ++j) l.a(j, 0, 1);
        net.layers.push_back(l.done());
    }

    net.cls.w = {Rat(1)};
    net.cls.threshold = 0;
    net.cls.dir = Classifier::Dir::LE;
    net.validate();
    return net;
}

// The gadget-order network. Writing s/t/i for the three vertex roles
// ((1,0), (0,1), (0,0)), o(v)/r(v) for the underlying out-/in-degrees and
// n for the number of underlying vertices, the schedule is:
//
//   layer 1  role indicators s, t, i = ReLU(1-p1-p2), constant 1, and the
//            psi1 violation flag ReLU(p1+p2-1)
//   layer 2  neighbour counts toward each role at offsets 0/-1/-2 (dt*, ds*,
//            di*), plus readouts V1 (psi1 violations) and nIota (= n)
//   layer 3  |E| = sum(dt)-n; role-clean degree dims os = ReLU(dt-i) and
//            rs = ReLU(ds-i) (o at s-vertices resp. r at t-vertices, zero
//            elsewhere); per-vertex violation flags for psi2/psi3/psi4 built
//            from indicator differences like [ds>=1] = ds0-ds1
//   layer 4  zos = sum of os over neighbours (A(u) = inflow of o at t_u,
//            o(v) at iota_v); threshold dims for the degree-pairing test
//            o+r vs n-1 at iota vertices; WS = total violation count; n^2
//   layer 5  iota-cleaned pairing indicators (bounded dims minus s+t);
//            Praw = sum(zos) = sum o^2 + |E|; n^3
//   layer 6  OVER/UNDER = readouts of the pairing indicators
//   layer 7  ReLU deviations: |E| vs C(n,2) and sum o^2 vs n(n-1)(2n-1)/6.
//            Under the pairing condition o+r = n-1 everywhere the latter is
//            equivalent to hom(gadget P2) = C(n,3), since sum o*r =
//            (n-1)|E| - sum o^2; the hom-count characterization then forces
//            a strict linear order.
//   layer 8  total = deviations + violation counts; accept iff <= 0
AcrGnn build_gadget_order_gnn() {
    AcrGnn net;
    net.input_dim = 2;

    // layer 1 out: 0:s 1:t 2:i 3:one 4:v1
    {
        LayerBuilder l(2, 5);
        l.a(0, 0, 1);
        l.a(1, 1, 1);
        l.bias(2, 1).a(0, 2, -1).a(1, 2, -1);
        l.bias(3, 1);
        l.a(0, 4, 1).a(1, 4, 1).bias(4, -1);
        net.layers.push_back(l.done());
    }
    // layer 2 out: 0:s 1:t 2:i 3:one 4:dt0 5:dt1 6:dt2 7:ds0 8:ds1 9:ds2
    //              10:di0 11:di1 12:di2 13:V1 14:nIota
    {
        LayerBuilder l(5, 15);
        for (int j = 0; j < 4; ++j) l.carry(j, j);
        for (int k = 0; k < 3; ++k) {
            l.c(1, 4 + k, 1).bias(4 + k, -k);   // toward t
            l.c(0, 7 + k, 1).bias(7 + k, -k);   // toward s
            l.c(2, 10 + k, 1).bias(10 + k, -k); // toward iota
        }
        l.r(4, 13, 1);
        l.r(2, 14, 1);
        net.layers.push_back(l.done());
    }
    // layer 3 out: 0:s 1:t 2:one 3:V1 4:nIota 5:Eund 6:os 7:rs
    //              8:wss 9:wtt 10:wii 11:wp3 12:wp4s 13:wp4t
    {
        LayerBuilder l(15, 14);
        l.carry(0, 0);
        l.carry(1, 1);
        l.carry(3, 2);
        l.carry(13, 3);
        l.carry(14, 4);
        l.r(4, 5, 1).a(14, 5, -1);               // sum(dt) - n
        l.a(4, 6, 1).a(2, 6, -1);                // os = ReLU(dt - i)
        l.a(7, 7, 1).a(2, 7, -1);                // rs = ReLU(ds - i)
        l.a(0, 8, 1).a(7, 8, 1).a(8, 8, -1).bias(8, -1);    // s with an s-neighbour
        l.a(1, 9, 1).a(4, 9, 1).a(5, 9, -1).bias(9, -1);    // t with a t-neighbour
        l.a(2, 10, 1).a(10, 10, 1).a(11, 10, -1).bias(10, -1);  // iota with an iota-neighbour
        l.a(0, 11, 1).a(1, 11, 1).a(10, 11, -1).a(11, 11, 2).a(12, 11, -1);  // s/t, #iota != 1
        l.a(2, 12, 1).a(7, 12, -1).a(8, 12, 2).a(9, 12, -1);  // iota, #s != 1
        l.a(2, 13, 1).a(4, 13, -1).a(5, 13, 2).a(6, 13, -1);  // iota, #t != 1
        net.layers.push_back(l.done());
    }
    // layer 4 out: 0:one 1:V1 2:nIota 3:Eund 4:s 5:t 6:zos
    //              7:ova 8:ovb 9:una 10:unb 11:WS 12:n2
    {
        LayerBuilder l(14, 13);
        l.carry(2, 0);
        l.carry(3, 1);
        l.carry(4, 2);
        l.carry(5, 3);
        l.carry(0, 4);
        l.carry(1, 5);
        l.c(6, 6, 1);  // zos
        // u1 = sum_N(os) + sum_N(rs) = o + r at iota vertices
        l.c(6, 7, 1).c(7, 7, 1).a(4, 7, -1).bias(7, 1);   // ReLU(u1 - (n-1))
        l.c(6, 8, 1).c(7, 8, 1).a(4, 8, -1);              // ReLU(u1 - n)
        l.a(4, 9, 1).bias(9, -1).c(6, 9, -1).c(7, 9, -1); // ReLU((n-1) - u1)
        l.a(4, 10, 1).bias(10, -2).c(6, 10, -1).c(7, 10, -1);
        for (int j = 8; j <= 13; ++j) l.r(j, 11, 1);      // violation total
        l.r(4, 12, rat(1, 3));                            // n^2 = sum_V(n)/3
        net.layers.push_back(l.done());
    }
    // layer 5 out: 0:one 1:V1 2:nIota 3:Eund 4:WS 5:n2 6:ovc 7:unc 8:Praw 9:n3
    {
        LayerBuilder l(13, 10);
        l.carry(0, 0);
        l.carry(1, 1);
        l.carry(2, 2);
        l.carry(3, 3);
        l.carry(11, 4);
        l.carry(12, 5);
        l.a(7, 6, 1).a(8, 6, -1).a(4, 6, -1).a(5, 6, -1);   // [o+r >= n] at iota only
        l.a(9, 7, 1).a(10, 7, -1).a(4, 7, -1).a(5, 7, -1);  // [o+r <= n-2] at iota only
        l.r(6, 8, 1);                                       // sum o^2 + |E|
        l.r(12, 9, rat(1, 3));                              // n^3
        net.layers.push_back(l.done());
    }
    // layer 6 out: 0:V1 1:nIota 2:Eund 3:WS 4:n2 5:Praw 6:n3 7:OV 8:UN
    {
        LayerBuilder l(10, 9);
        l.carry(1, 0);
        l.carry(2, 1);
        l.carry(3, 2);
        l.carry(4, 3);
        l.carry(5, 4);
        l.carry(8, 5);
        l.carry(9, 6);
        l.r(6, 7, 1);
        l.r(7, 8, 1);
        net.layers.push_back(l.done());
    }
    // layer 7 out: 0:dEp 1:dEm 2:dPp 3:dPm 4:V1 5:WS 6:OV 7:UN
    {
        LayerBuilder l(9, 8);
        // |E| vs (n^2 - n)/2
        l.a(2, 0, 1).a(4, 0, rat(-1, 2)).a(1, 0, rat(1, 2));
        l.a(2, 1, -1).a(4, 1, rat(1, 2)).a(1, 1, rat(-1, 2));
        // sum o^2 = Praw - |E| vs (2n^3 - 3n^2 + n)/6
        l.a(5, 2, 1).a(2, 2, -1).a(6, 2, rat(-1, 3)).a(4, 2, rat(1, 2)).a(1, 2, rat(-1, 6));
        l.a(5, 3, -1).a(2, 3, 1).a(6, 3, rat(1, 3)).a(4, 3, rat(-1, 2)).a(1, 3, rat(1, 6));
        l.carry(0, 4);
        l.carry(3, 5);
        l.carry(7, 6);
        l.carry(8, 7);
        net.layers.push_back(l.done());
    }
    // layer 8: the total
    {
        LayerBuilder l(8, 1);
        for (int j = 0; j < 8; ++j) l.a(j, 0, 1);
        net.layers.push_back(l.done());
    }

    net.cls.w = {Rat(1)};
    net.cls.threshold = 0;
    net.cls.dir = Classifier::Dir::LE;
    net.validate();
    return net;
}

}  // namespace acr
