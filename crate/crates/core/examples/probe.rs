// scratch probe for dimensions and timings (removed before release)
use std::time::Instant;

use holonomy_core::berger;
use holonomy_core::rep::{clifford, families, functors, Representation};
use holonomy_core::spencer;

fn analyze(label: &str, h: &Representation, chars_too: bool) {
    let t0 = Instant::now();
    let (_, h1, coker) = spencer::delta_torsion(h);
    let t1 = Instant::now();
    let k = spencer::curvature_space(h);
    let t2 = Instant::now();
    let k1 = spencer::curvature_prolongation(h, &k).unwrap();
    let t3 = Instant::now();
    println!(
        "{label}: dim_m={} dim_h={} h1={} coker={} K={} K1={}  [torsion {:?} K {:?} K1 {:?}]",
        h.dim_m(),
        h.dim_h(),
        h1.dim(),
        coker,
        k.dim(),
        k1.dim(),
        t1 - t0,
        t2 - t1,
        t3 - t2
    );
    let span = berger::curvature_span(h, &k).unwrap();
    println!(
        "  span={} berger1={} berger2={}",
        span.dim(),
        span.dim() == h.dim_h(),
        k1.dim() > 0
    );
    if chars_too && k1.dim() > 0 {
        let t4 = Instant::now();
        let tab = spencer::Tableau::from_subspace(k.dim(), h.dim_m(), &k1.space);
        let chars = spencer::cartan_characters(&tab, 2024, 5);
        let t5 = Instant::now();
        let p = tab.prolongation_dim();
        let t6 = Instant::now();
        let verdict = spencer::involutivity_with_prolongation(&tab, &chars, p);
        println!(
            "  chars={:?} K2={} bound={} status={:?}  [chars {:?} K2 {:?}]",
            chars.s,
            p,
            chars.cartan_bound(),
            verdict.status,
            t5 - t4,
            t6 - t5
        );
        let t7 = Instant::now();
        let absorb = berger::absorbability_check(h, &k, &k1);
        println!("  absorbable={:?}  [{:?}]", absorb, Instant::now() - t7);
    } else if chars_too {
        let t7 = Instant::now();
        let absorb = berger::absorbability_check(h, &k, &k1);
        println!("  absorbable={:?}  [{:?}]", absorb, Instant::now() - t7);
    }
    println!("  commutant={}", h.commutant().dim());
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let which = args.get(1).map(|s| s.as_str()).unwrap_or("small");

    match which {
        "small" => {
            for k in 1..=6 {
                let h = families::sl2_irrep(k).unwrap();
                analyze(&format!("sl2-V{k}"), &h, true);
            }
            let v1 = families::sl2_irrep(1).unwrap();
            analyze("V1+V1", &functors::direct_sum(&v1, &v1).unwrap(), true);
        }
        "34" => {
            // the leftover low-dimensional cases
            let sl2r = families::sl2_irrep(1).unwrap().realify();
            let j = sl2r.complex_structure().unwrap().clone();
            let lam0 = sl2r.add_center(j.clone()).unwrap();
            analyze("case-lambda0", &lam0, true);
            let idpj = holonomy_core::Matrix::identity(4).add(&j);
            let lam1 = sl2r.add_center(idpj.clone()).unwrap();
            analyze("case-lambda1", &lam1, true);
            let su2 = families::su(2, 0).unwrap();
            let j2 = su2.complex_structure().unwrap().clone();
            let su2c = su2
                .add_center(holonomy_core::Matrix::identity(4).add(&j2))
                .unwrap();
            analyze("case-su2-lambda1", &su2c, true);
        }
        "metric" => {
            for (p, q) in [(3, 0), (2, 1), (4, 0), (3, 1), (2, 2), (5, 0), (4, 1), (3, 2)] {
                let h = families::so(p, q).unwrap();
                analyze(&format!("so({p},{q})"), &h, true);
            }
            analyze("u(2)", &families::u(2, 0).unwrap(), true);
            analyze("su(2)", &families::su(2, 0).unwrap(), true);
        }
        "sp" => {
            analyze("sp(2,R)", &families::sp(2).unwrap(), true);
            analyze("sp(3,R)", &families::sp(3).unwrap(), false);
            for n in 1..=4 {
                let h = families::gl(n).unwrap();
                let (_, h1, coker) = spencer::delta_torsion(&h);
                println!("gl({n}): h1={} coker={}", h1.dim(), coker);
            }
        }
        "g2" => {
            let g2 = families::stabilizer_algebra(&families::FormTensor::g2_three_form()).unwrap();
            analyze("g2", &g2, true);
        }
        "spin7" => {
            let h = clifford::spin_rep(7, 0).unwrap();
            analyze("spin(7)", &h, false);
        }
        "spin7full" => {
            let h = clifford::spin_rep(7, 0).unwrap();
            analyze("spin(7)", &h, true);
        }
        "sostar" => {
            let h = families::so_star(6).unwrap();
            analyze("so*(6)", &h, false);
        }
        "spin9" => {
            let h = clifford::spin_rep(9, 0).unwrap();
            analyze("spin(9)", &h, false);
        }
        "sl2so3" => {
            let a = families::sl2_irrep(1).unwrap();
            let b = families::so(3, 0).unwrap();
            let h = functors::tensor_product(&a, &b).unwrap();
            analyze("sl2*so3", &h, true);
        }
        "u-tail" => {
            for (p, q) in [(1, 1), (3, 0), (2, 1), (4, 0), (2, 2), (3, 1)] {
                analyze(&format!("u({p},{q})"), &families::u(p, q).unwrap(), true);
            }
            for (p, q) in [(1, 1), (3, 0), (2, 1), (4, 0), (2, 2), (3, 1)] {
                analyze(&format!("su({p},{q})"), &families::su(p, q).unwrap(), true);
            }
        }
        "spin55" => {
            let h = clifford::spin_rep(5, 5).unwrap();
            analyze("spin(5,5)", &h, false);
        }
        "spin55full" => {
            let h = clifford::spin_rep(5, 5).unwrap();
            analyze("spin(5,5)", &h, true);
        }
        "spin43" => {
            let h = clifford::spin_rep(4, 3).unwrap();
            analyze("spin(4,3)", &h, true);
        }
        "v3conf" => {
            let h = families::sl2_irrep(3)
                .unwrap()
                .add_center(holonomy_core::Matrix::identity(4))
                .unwrap();
            analyze("R+.sl2-V3", &h, true);
        }
        "sp3chars" => {
            let h = families::sp(3).unwrap();
            analyze("sp(3,R)", &h, true);
        }
        other => eprintln!("unknown probe {other}"),
    }
}
