//! Dispatcher against values frozen from an independent 80-digit
//! evaluation (mpmath hypergeometric representation, U cross-checked with
//! mpmath's own pcfu).

use pcf::dispatch::{evaluate, EvalOptions};
use pcf::{FunctionQuad, RegionTag, ScaledValue};

/// Decimal string to a scaled value; exponents may exceed the f64 range.
fn sv(s: &str) -> ScaledValue {
    let (m, e) = s.split_once('e').unwrap_or((s, "0"));
    let m: f64 = m.parse().unwrap();
    let e: f64 = e.parse().unwrap();
    ScaledValue::new(m, e * std::f64::consts::LN_10)
}

fn reference(v: [&str; 4]) -> FunctionQuad {
    FunctionQuad {
        u: sv(v[0]),
        du: sv(v[1]),
        v: sv(v[2]),
        dv: sv(v[3]),
        region: RegionTag::Series,
        err_estimate: 0.0,
    }
}

#[rustfmt::skip]
const ORACLE: &[(f64, f64, [&str; 4])] = &[
    (-12.5, 0.0, ["1.0395e4", "0.0", "0.0", "7.6756571505807153043e-5"]),
    (-12.5, 7.0, ["1.0765467875942716228e4", "-1.1116962712620631548e4", "3.3209784150691484299e-5", "3.9821086611891311933e-5"]),
    (-12.5, 12.0, ["1.2589813869169044084e-3", "-6.1816604289553604491e-3", "6.538782169600584827e1", "3.1269664109423480432e2"]),
    (-12.5, -7.0, ["1.0765467875942716228e4", "1.1116962712620631548e4", "-3.3209784150691484299e-5", "3.9821086611891311933e-5"]),
    (-50.0, 3.0, ["2.2000073859877846077e31", "2.3487672596075846427e31", "-7.8637593974849423623e-34", "3.5427809249952622785e-32"]),
    (-50.0, -15.0, ["1.6456554170606512549e32", "-3.4432850662255739188e32", "1.0021853203226208792e-33", "2.7515091033206239151e-33"]),
    (-50.0, 19.8, ["1.2087712051601413618e20", "-8.4369016907484240948e20", "4.7637454838069017672e-22", "3.2758228839853087961e-21"]),
    (-200.0, 28.3, ["2.6234769333558445877e186", "-4.7620409096943056052e186", "8.6182567912024641174e-188", "1.4769699011900520761e-187"]),
    (-200.0, -27.9, ["1.1137588887735178083e186", "-1.0709990265038027347e187", "7.2853258248535108867e-188", "1.582647228446711631e-188"]),
    (-200.0, 40.0, ["4.6300626503260829236e139", "-6.5594320014559607396e140", "6.0927157236725217403e-142", "8.6011150591775269668e-141"]),
    (-1000.0, 30.0, ["9.3174498355003427007e1280", "-5.3096902230187185858e1283", "1.4991048433053769709e-1284", "2.045975946921923086e-1284"]),
    (-1000.0, 70.0, ["1.1999026337067372109e1253", "-1.8044926254600881857e1254", "2.2165603700639907072e-1255", "3.3161680411259160544e-1254"]),
    (-3.0, 2.0, ["1.0920159712050256736", "1.2742801416777271297", "-2.400314088698301848e-1", "4.5055870616816976696e-1"]),
    (-0.5, 1.0, ["7.7880078307140486825e-1", "-3.8940039153570243412e-1", "7.4253847070312689921e-1", "6.5323482030205134493e-1"]),
    (2.0, -4.0, ["8.4316663422718452213e2", "-1.9925972895393290537e3", "1.9338304406586287741e-4", "4.8928647625209993835e-4"]),
    (10.0, 5.0, ["1.5496568962879376487e-11", "-6.3064842306563855271e-11", "6.3862155065142163777e9", "2.5498475688091525239e10"]),
    (50.0, -10.0, ["7.3902012996748670149", "-6.3877974714736923201e1", "6.2333621714746897336e-3", "5.4086484713642750707e-2"]),
    (40.0, 20.0, ["1.117689420145918053e-97", "-1.3244605279229133817e-96", "3.0166574395646431625e95", "3.5639613574764229262e96"]),
    (100.0, 0.1, ["4.2657607906039427002e-80", "-4.2658940867159621619e-79", "9.3520199651392149044e77", "9.3520784147161286645e78"]),
    (-8.4, 4.4, ["6.4323386661752755916e1", "1.9512204770000594159e2", "-2.9782893174391113685e-3", "3.3697642768858923691e-3"]),
    (-24.75, -11.0, ["-2.575623342826801652e12", "5.3715334365094211938e12", "-1.9302488832117154816e-12", "3.7158041306031928784e-12"]),
    (-30.0, 60.0, ["3.4619093229141152706e-339", "-1.0214148555244763949e-337", "3.906922605279531281e336", "1.1520396543068822637e338"]),
];

#[test]
fn dispatch_matches_frozen_values() {
    let mut worst = (0.0, 0.0, 0.0);
    for &(a, z, vals) in ORACLE {
        let got = evaluate(a, z, &EvalOptions::default()).unwrap();
        let err = got.envelope_error(&reference(vals), a, z);
        if err > worst.2 {
            worst = (a, z, err);
        }
        assert!(
            err <= 1e-10,
            "({a}, {z}) via {}: error {err:.2e}",
            got.region
        );
    }
    eprintln!(
        "worst oracle error {:.2e} at a={}, z={}",
        worst.2, worst.0, worst.1
    );
}

#[test]
fn exact_zeros_at_the_origin() {
    // U(-12.5, 0) = 11!! and V(-12.5, 0) = 0 (Hermite case n = 12).
    let q = evaluate(-12.5, 0.0, &EvalOptions::default()).unwrap();
    assert!((q.u.value() / 10395.0 - 1.0).abs() < 1e-12);
    assert!(q.v.value().abs() < 1e-12 * q.dv.value().abs());
}

#[test]
fn hermite_polynomials() {
    // U(-n-½, z) = 2^{-n/2} e^{-z²/4} H_n(z/√2)
    for n in 0..=10usize {
        for z in [-3.5, -0.7, 1.3, 6.0] {
            let x = z / std::f64::consts::SQRT_2;
            let (mut h0, mut h1) = (1.0, 2.0 * x);
            if n == 0 {
                h1 = h0;
            }
            for k in 1..n {
                let h2 = 2.0 * x * h1 - 2.0 * k as f64 * h0;
                h0 = h1;
                h1 = h2;
            }
            let expect = 2f64.powf(-(n as f64) / 2.0) * (-z * z / 4.0).exp() * h1;
            let got = evaluate(-(n as f64) - 0.5, z, &EvalOptions::default()).unwrap();
            let rel = (got.u.value() - expect).abs() / expect.abs();
            assert!(rel <= 1e-11, "n={n} z={z}: {rel:.2e}");
        }
    }
}
