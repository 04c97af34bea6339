//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use stratih_core::euler::{ichi_c_direct, ichi_c_stratumwise, link_ih};
use stratih_core::gallery::{self, gallery, list_gallery};
use stratih_core::hopf::{multiplicity, verify_poincare_hopf, PHReport, Verdict, ZeroDatum};
use stratih_core::intersection::{alternating_sum, ih_dims, kunneth_manifold_oracle, suspension_ih_oracle};
use stratih_core::{ComponentId, StandardPerversity, StratifiedSpace};

use StandardPerversity::{LowerMiddle, Top, UpperMiddle, Zero};

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn components_of(space: &StratifiedSpace, stratum: u32) -> Vec<ComponentId> {
    space.components().iter().filter(|c| c.id.stratum == stratum).map(|c| c.id).collect()
}

fn equal(report: &PHReport) -> Result<(), String> {
    eq("verdict", report.verdict, Verdict::Equal)
}

fn criterion_1() -> Check {
    let s = gallery("pinched_torus").map_err(|e| e.to_string())?;
    let p = Zero.for_dim(2);
    eq("IH", ih_dims(&s, &p, 0).unwrap().dims, vec![1, 0, 1])?;
    eq("Ichi", ichi_c_direct(&s, &p, 0).unwrap(), 2)?;
    eq("multiplicity", multiplicity(&s, &p, ComponentId { stratum: 1, component: 0 }, 0).unwrap(), 2)?;
    let report = verify_poincare_hopf(&s, &p, &[ZeroDatum::new(1, 0, 1, "pinch")], 0).unwrap();
    equal(&report)?;
    Ok(format!("IH (1,0,1), Ichi 2, m 2, {} = {}", report.sum, report.ichi))
}

fn criterion_2() -> Check {
    let s = gallery("susp_torus2").unwrap();
    let (z, t) = (Zero.for_dim(3), Top.for_dim(3));
    let ih_t = ih_dims(&s, &t, 0).unwrap().dims;
    eq("IH top", ih_t.clone(), vec![1, 0, 2, 1])?;
    eq("Ichi top", ichi_c_direct(&s, &t, 0).unwrap(), 2)?;
    eq("Ichi zero", ichi_c_direct(&s, &z, 0).unwrap(), -2)?;
    let poles = components_of(&s, 1);
    eq("pole count", poles.len(), 2)?;
    for &pole in &poles {
        eq("m zero", multiplicity(&s, &z, pole, 0).unwrap(), -1)?;
        eq("m top", multiplicity(&s, &t, pole, 0).unwrap(), 1)?;
    }
    let zeros = [ZeroDatum::new(1, 0, 1, "north"), ZeroDatum::new(1, 1, 1, "south")];
    for p in [&z, &t] {
        equal(&verify_poincare_hopf(&s, p, &zeros, 0).unwrap())?;
    }
    let mut ih_z = ih_dims(&s, &z, 0).unwrap().dims;
    ih_z.reverse();
    eq("duality", ih_z, ih_t)?;
    Ok("IH top (1,0,2,1), Ichi 2 / -2, poles -1 / 1, PH equal, duality".into())
}

fn criterion_3() -> Check {
    let s = gallery("torus3_2p").unwrap();
    eq("homology", s.complex().homology_dims(), vec![1, 1, 4, 2])?;
    eq("IH zero", ih_dims(&s, &Zero.for_dim(3), 0).unwrap().dims, vec![2, 4, 0, 2])?;
    eq("IH top", ih_dims(&s, &Top.for_dim(3), 0).unwrap().dims, vec![2, 0, 4, 2])?;
    Ok("H (1,1,4,2), IH zero (2,4,0,2), IH top (2,0,4,2)".into())
}

fn criterion_4() -> Check {
    let s = gallery("susp_torus3_2p").unwrap();
    eq("IH lower-middle", ih_dims(&s, &LowerMiddle.for_dim(4), 0).unwrap().dims, vec![2, 4, 0, 0, 2])?;
    eq("IH zero", ih_dims(&s, &Zero.for_dim(4), 0).unwrap().dims, vec![2, 4, 0, 0, 2])?;
    let table = [(Top, -2), (UpperMiddle, -2), (LowerMiddle, 2), (Zero, 2)];
    let arcs = components_of(&s, 1);
    let poles = components_of(&s, 2);
    eq("arc count", arcs.len(), 2)?;
    eq("pole count", poles.len(), 2)?;
    let zeros = [
        ZeroDatum::new(2, 0, 1, "pole 1"),
        ZeroDatum::new(2, 1, 1, "pole 2"),
        ZeroDatum::new(1, 0, -1, "x2"),
        ZeroDatum::new(1, 1, -1, "x3"),
    ];
    for (kind, m) in table {
        let p = kind.for_dim(4);
        eq(&format!("Ichi {kind}"), ichi_c_direct(&s, &p, 0).unwrap(), 0)?;
        for &c in arcs.iter().chain(&poles) {
            eq(&format!("m {kind} at {c:?}"), multiplicity(&s, &p, c, 0).unwrap(), m)?;
        }
        equal(&verify_poincare_hopf(&s, &p, &zeros, 0).unwrap())?;
    }
    Ok("IH (2,4,0,0,2), Ichi 0 x4, m {t:-2, n:-2, m:2, 0:2}, PH 0 = 2+2-2-2 x4".into())
}

fn criterion_5() -> Check {
    let mut count = 0;
    for e in list_gallery() {
        let s = gallery(e.name).unwrap();
        for kind in StandardPerversity::ALL {
            let p = kind.for_dim(e.n);
            let direct = ichi_c_direct(&s, &p, e.subdivisions).unwrap();
            let stratumwise = ichi_c_stratumwise(&s, &p, e.subdivisions).unwrap().total;
            eq(&format!("{} {kind}", e.name), stratumwise, direct)?;
            count += 1;
        }
    }
    Ok(format!("{count} space/perversity pairs agree"))
}

fn criterion_6() -> Check {
    let torus = StratifiedSpace::single_stratum(gallery::torus2_complex(), 2, "T2").unwrap();
    let two_tori =
        StratifiedSpace::single_stratum(gallery::torus2_complex().disjoint_union(&gallery::torus2_complex()), 2, "T2+T2")
            .unwrap();
    let cases = [("susp_torus2", torus), ("torus3_2p", two_tori), ("susp_torus3_2p", gallery("torus3_2p").unwrap())];
    for (name, base) in cases {
        let s = gallery(name).unwrap();
        for kind in StandardPerversity::ALL {
            let p = kind.for_dim(s.n());
            let b = ih_dims(&base, &p.restrict(base.n()), 0).unwrap().dims;
            eq(&format!("{name} {kind}"), ih_dims(&s, &p, 0).unwrap().dims, suspension_ih_oracle(&b, &p).unwrap())?;
        }
    }
    Ok("3 suspensions x 4 perversities".into())
}

fn criterion_7() -> Check {
    let out = Command::new(env!("CARGO_BIN_EXE_stratih"))
        .args(["converse", "susp_torus3_2p_x_sphere2", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    eq("converse exit code", out.status.code(), Some(3))?;
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    eq("exists", v["exists"].as_bool(), Some(false))?;
    let witness = v["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .find(|w| w["stratum"] == 2 && w["chi_c"] == 2 && w["dim"] == 2)
        .cloned()
        .ok_or("no pole x S2 witness with chi_c 2")?;
    let base = gallery("susp_torus3_2p").unwrap();
    let sphere = gallery::sphere2_complex().homology_dims();
    for kind in StandardPerversity::ALL {
        let x = ih_dims(&base, &kind.for_dim(4), 0).unwrap().dims;
        eq(&format!("Kunneth Ichi {kind}"), alternating_sum(&kunneth_manifold_oracle(&x, &sphere)), 0)?;
    }
    Ok(format!("no nonsingular field, witness {} chi_c 2, Kunneth Ichi 0 x4", witness["name"]))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn criterion_8() -> Check {
    // boundary of boundary
    for e in list_gallery() {
        let k = gallery(e.name).unwrap().complex().clone();
        for d in 2..k.f_vector().len() {
            ensure!(k.boundary_matrix(d - 1).mul(&k.boundary_matrix(d)).is_zero(), "{}: dd != 0 in degree {d}", e.name);
        }
    }
    // subdivision stability
    for e in list_gallery().into_iter().filter(|e| e.n <= 4) {
        let s = gallery(e.name).unwrap();
        for kind in StandardPerversity::ALL {
            let p = kind.for_dim(e.n);
            eq(&format!("{} {kind} N=0 vs N=1", e.name), ih_dims(&s, &p, 1).unwrap().dims, ih_dims(&s, &p, 0).unwrap().dims)?;
        }
    }
    // link choice
    let mut links = 0;
    for e in list_gallery() {
        let s = gallery(e.name).unwrap();
        for c in s.components().iter().filter(|c| c.dim > 0 && c.dim < s.n()) {
            for kind in StandardPerversity::ALL {
                let p = kind.for_dim(s.n());
                let reference = link_ih(&s, c, &p, 0).unwrap();
                for sigma in c.top_simplices() {
                    let link = s.link_at(sigma).unwrap();
                    eq(
                        &format!("{} link at {sigma:?}", e.name),
                        ih_dims(&link, &p.restrict(link.n()), 0).unwrap().dims,
                        reference.clone(),
                    )?;
                    links += 1;
                }
            }
        }
    }
    // permutation and splitting of zeros
    let s = gallery("susp_torus3_2p").unwrap();
    let zeros = [
        ZeroDatum::new(2, 0, 1, "pole 1"),
        ZeroDatum::new(2, 1, 1, "pole 2"),
        ZeroDatum::new(1, 0, -1, "x2"),
        ZeroDatum::new(1, 1, -1, "x3"),
    ];
    for kind in StandardPerversity::ALL {
        let p = kind.for_dim(4);
        let reference = verify_poincare_hopf(&s, &p, &zeros, 0).unwrap();
        for perm in permutations(zeros.len()) {
            let shuffled: Vec<_> = perm.iter().map(|&i| zeros[i].clone()).collect();
            let r = verify_poincare_hopf(&s, &p, &shuffled, 0).unwrap();
            eq("permuted", (r.sum, r.verdict), (reference.sum, reference.verdict))?;
        }
        for (i, z) in zeros.iter().enumerate().filter(|(_, z)| z.component.stratum == 1) {
            for a in -2..=2 {
                let mut split: Vec<_> = zeros.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, z)| z.clone()).collect();
                split.push(ZeroDatum { index: a, ..z.clone() });
                split.push(ZeroDatum { index: z.index - a, ..z.clone() });
                let r = verify_poincare_hopf(&s, &p, &split, 0).unwrap();
                eq("split", (r.sum, r.verdict), (reference.sum, reference.verdict))?;
            }
        }
    }
    // classical sanity
    let sphere = gallery("sphere2").unwrap();
    let r = verify_poincare_hopf(&sphere, &Zero.for_dim(2), &[ZeroDatum::new(0, 0, 2, "north")], 0).unwrap();
    equal(&r)?;
    eq("S2 sum", r.sum, 2)?;
    Ok(format!("dd = 0, N=0/N=1 stable, {links} links, 24 permutations, splittings, S2 index 2"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("pinched torus", Duration::from_secs(5), criterion_1),
        ("suspension of the torus", Duration::from_secs(10), criterion_2),
        ("twice pinched 3-torus", Duration::from_secs(30), criterion_3),
        ("suspended twice pinched 3-torus", Duration::from_secs(300), criterion_4),
        ("stratumwise = direct", Duration::from_secs(300), criterion_5),
        ("suspension oracle", Duration::from_secs(300), criterion_6),
        ("6-dimensional converse", Duration::from_secs(60), criterion_7),
        ("property suites", Duration::from_secs(600), criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(_) if elapsed > limit => Err(format!("took {:.2}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs())),
            r => r,
        };
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name} ({:.2}s): {detail}", i + 1, elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({:.2}s): {why}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
