mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use hgt_core::dimensions::{dim_m, dirac_kernel_dim_oracle, initial_data_total, kernel_dim_oracle, DEFAULT_BUDGET};
use hgt_core::gt::appell::{appell_check, derivative_matrix, Variable};
use hgt_core::gt::{
    ck_roundtrip, closed_form_family, closed_form_n2, gt_basis, gt_basis_via_extension, lattice_check,
    monogenic_basis, scalar_matches, BasisFamily, WeightVector,
};
use hgt_core::operators::{
    apply_upz, apply_upzd, is_hermitean_monogenic, laplacian, mul_zdvec, mul_zvec, apply_dirac,
};
use hgt_core::{GaussianRational, Result, SpaceDescriptor, SpinorIndex, SpinorPolynomial};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{antiholomorphic_display, binom, holomorphic_display, interlacing, random_poly};

type Outcome = Result<(bool, String)>;

fn descriptors(n: usize, max_total: usize) -> impl Iterator<Item = SpaceDescriptor> {
    (0..=max_total).flat_map(move |a| {
        (0..=max_total - a).flat_map(move |b| (0..=n).map(move |r| SpaceDescriptor::new(n, a, b, r).unwrap()))
    })
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=3 {
        for d in descriptors(n, 4) {
            checked += 1;
            let oracle = kernel_dim_oracle(&d, DEFAULT_BUDGET)?;
            if oracle != dim_m(&d) {
                bad.push(format!("{d}: formula {} oracle {oracle}", dim_m(&d)));
            }
        }
    }
    for a in 0..=4 {
        for b in 0..=4 - a {
            if dim_m(&SpaceDescriptor::new(2, a, b, 1)?) != (a + b + 2) as u64 {
                bad.push(format!("n=2 r=1 spot value at ({a},{b})"));
            }
        }
        let expected = ((a + 1) * (a + 2) / 2) as u64;
        if dim_m(&SpaceDescriptor::new(3, a, 0, 3)?) != expected {
            bad.push(format!("n=3 r=3 spot value at a={a}"));
        }
    }
    if dim_m(&SpaceDescriptor::new(3, 0, 2, 0)?) != 6 {
        bad.push("n=3 (0,2) r=0 spot value".into());
    }
    Ok((bad.is_empty(), format!("{checked} spaces against kernel rank, {} mismatches {:?}", bad.len(), bad)))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 2..=4 {
        for a in 0..=4 {
            for b in 0..=4 {
                for r in 1..n {
                    let d = SpaceDescriptor::new(n, a, b, r)?;
                    checked += 1;
                    if initial_data_total(&d) != dim_m(&d) {
                        bad.push(d.to_string());
                    }
                }
            }
        }
    }
    Ok((bad.is_empty(), format!("{checked} spaces, failing {bad:?}")))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    let mut members = 0;
    let mut bad = Vec::new();
    for (n, max_total) in [(2, 4), (3, 3)] {
        for d in descriptors(n, max_total) {
            let family = gt_basis(d.n, d.a, d.b, d.r)?;
            let verdict = family.verify()?;
            let oracle = kernel_dim_oracle(&d, DEFAULT_BUDGET)?;
            checked += 1;
            members += family.len();
            if !verdict.passed() || family.len() as u64 != oracle {
                bad.push(format!("{d}: {verdict:?}"));
            }
        }
    }
    Ok((bad.is_empty(), format!("{checked} families, {members} members, failing {bad:?}")))
}

fn mono2(z: [u32; 2], zb: [u32; 2], k: usize, c: i64) -> SpinorPolynomial {
    SpinorPolynomial::monomial(z.to_vec(), zb.to_vec(), SpinorIndex::from_list(2, &[k]).unwrap(), GaussianRational::from_int(c))
        .unwrap()
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    let mut scalars = BTreeSet::new();
    let mut checked = 0;
    for a in 0..=3usize {
        for b in 0..=3usize {
            let family = gt_basis(2, a, b, 1)?;
            let top = WeightVector::new(vec![a as i64 + 1, -(b as i64)])?;
            for mu in -(b as i64)..=a as i64 + 1 {
                checked += 1;
                let closed = closed_form_n2(a as i64, b as i64, mu);
                if !is_hermitean_monogenic(&closed)? {
                    bad.push(format!("closed form ({a},{b},{mu}) not h-monogenic"));
                }
                let chain = [top.clone(), WeightVector::new(vec![mu])?];
                match family.find_chain(&chain).and_then(|p| p.ratio_to(&closed)) {
                    Some(c) => {
                        println!("  closed-form scalar (a,b,mu)=({a},{b},{mu}): {c}");
                        scalars.insert(c.to_string());
                    }
                    None => bad.push(format!("({a},{b},{mu}) not a scalar multiple")),
                }
            }
        }
    }
    let anchor = mono2([0, 1], [0, 1], 1, 1).add(&mono2([1, 0], [1, 0], 1, -1))?.add(&mono2([1, 0], [0, 1], 2, 1))?;
    let chain = [WeightVector::new(vec![2, -1])?, WeightVector::new(vec![1])?];
    let family = gt_basis(2, 1, 1, 1)?;
    let anchor_ok = family.find_chain(&chain) == Some(&anchor.neg());
    if !anchor_ok {
        bad.push("anchor (1,1,1) is not -1 times the hand display".into());
    }
    Ok((bad.is_empty(), format!("{checked} elements, scalars seen {scalars:?}, anchor -1: {anchor_ok}, failing {bad:?}")))
}

fn same_set(left: &[SpinorPolynomial], right: &[SpinorPolynomial]) -> bool {
    left.len() == right.len() && left.iter().all(|p| right.contains(p)) && right.iter().all(|p| left.contains(p))
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    let mut route_scalars = BTreeSet::new();
    let mut checked = 0;
    for n in 1..=3 {
        for deg in 0..=4usize {
            for (family, display) in [
                (gt_basis(n, 0, deg, 0)?, antiholomorphic_display(n, deg as u32)),
                (gt_basis(n, deg, 0, n)?, holomorphic_display(n, deg as u32)),
            ] {
                checked += 1;
                if !same_set(&family.polys(), &display) {
                    bad.push(family.descriptor.to_string());
                }
                if n >= 2 {
                    let d = family.descriptor;
                    let ck = gt_basis_via_extension(d.n, d.a, d.b, d.r)?;
                    match scalar_matches(&family, &ck) {
                        Some(m) => route_scalars.extend(m.iter().map(|(_, c)| format!("n={n} r={}: {c}", d.r))),
                        None => bad.push(format!("{d}: CK route not proportional")),
                    }
                }
            }
        }
    }
    for s in &route_scalars {
        println!("  CK-route scalar {s}");
    }
    Ok((bad.is_empty(), format!("{checked} families match the displays, CK-route scalars {route_scalars:?}, failing {bad:?}")))
}

fn sparse_matrices(source: &BasisFamily, variables: &[Variable], target_of: &dyn Fn(&SpaceDescriptor) -> Result<BasisFamily>) -> Result<(usize, Vec<String>)> {
    let mut count = 0;
    let mut bad = Vec::new();
    for &v in variables {
        let target = match v.target(&source.descriptor) {
            Some(t) => target_of(&t)?,
            None => BasisFamily::empty(source.descriptor),
        };
        let m = derivative_matrix(v, source, &target)?;
        count += 1;
        if !(m.in_span && m.is_appell_sparse()) {
            bad.push(format!("d/d{v} on {}", source.descriptor));
        }
    }
    Ok((count, bad))
}

fn criterion_6() -> Outcome {
    let rep = appell_check(4, 4)?;
    let mut bad = rep.failures.clone();
    let mut matrices = 0;
    let vars2 = [Variable::Z(1), Variable::Z(2), Variable::Zbar(1), Variable::Zbar(2)];
    for a in 0..=4 {
        for b in 0..=4 {
            let (c, f) = sparse_matrices(&closed_form_family(a, b)?, &vars2, &|t| closed_form_family(t.a, t.b))?;
            matrices += c;
            bad.extend(f);
        }
    }
    for n in 2..=3 {
        let vars: Vec<Variable> = (1..=n).flat_map(|k| [Variable::Z(k), Variable::Zbar(k)]).collect();
        for deg in 0..=4 {
            for src in [gt_basis(n, 0, deg, 0)?, gt_basis(n, deg, 0, n)?] {
                let (c, f) = sparse_matrices(&src, &vars, &|t| gt_basis(t.n, t.a, t.b, t.r))?;
                matrices += c;
                bad.extend(f);
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!(
            "{} identities over {} elements, {matrices} derivative matrices, failing {bad:?}",
            rep.identities_checked, rep.elements_checked
        ),
    ))
}

fn criterion_7() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 2..=3 {
        for d in descriptors(n, 3) {
            let rep = ck_roundtrip(d.n, d.a, d.b, d.r)?;
            checked += 1;
            if !rep.passed() || rep.data_count as u64 != dim_m(&d) {
                bad.push(format!("{d}: {rep:?}"));
            }
        }
    }
    Ok((bad.is_empty(), format!("{checked} spaces, failing {bad:?}")))
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 2..=4 {
        for a in 0..=3 {
            for b in 0..=3 {
                for r in 1..n {
                    let rep = lattice_check(n, a, b, r)?;
                    checked += 1;
                    let weights: Vec<Vec<i64>> = rep.component_weights.iter().map(|w| w.components().to_vec()).collect();
                    let as_set: BTreeSet<Vec<i64>> = weights.iter().cloned().collect();
                    let oracle = interlacing(rep.top_weight.components());
                    let generic_ok = !(2..=n.saturating_sub(2)).contains(&r) || weights.len() == 2 * (a + 1) * (b + 1);
                    if !rep.passed() || as_set != oracle || as_set.len() != weights.len() || !generic_ok {
                        bad.push(rep.descriptor.to_string());
                    }
                }
            }
        }
    }
    Ok((bad.is_empty(), format!("{checked} spaces, failing {bad:?}")))
}

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    let mut counts = Vec::new();
    for k in 0..=4 {
        let basis = monogenic_basis(2, k)?;
        let v = basis.verify()?;
        let expected = 4 * binom(k as u64 + 2, 2);
        let oracle = dirac_kernel_dim_oracle(2, k, DEFAULT_BUDGET)?;
        let annihilated = basis.members.iter().all(|m| apply_dirac(&m.poly).map(|d| d.is_zero()).unwrap_or(false));
        counts.push(basis.members.len());
        if !v.passed() || basis.members.len() as u64 != expected || oracle != expected || !annihilated {
            bad.push(format!("k={k}: {v:?}, oracle {oracle}"));
        }
    }
    Ok((bad.is_empty(), format!("counts {counts:?}, failing {bad:?}")))
}

fn gamma(p: &SpinorPolynomial, alpha: usize, n: usize) -> Result<SpinorPolynomial> {
    if alpha <= n {
        p.annihilate(alpha)?.sub(&p.create(alpha)?)
    } else {
        let j = alpha - n;
        Ok(p.annihilate(j)?.add(&p.create(j)?)?.scale(&GaussianRational::i()))
    }
}

fn criterion_10() -> Outcome {
    const SAMPLES: u64 = 120;
    let mut bad = Vec::new();
    let mut identities = 0;
    let zero_or = |bad: &mut Vec<String>, ok: bool, what: String| {
        if !ok {
            bad.push(what);
        }
    };
    for seed in 0..SAMPLES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 1 + (seed % 3) as usize;
        let p = random_poly(&mut rng, n, 3);
        for j in 1..=n {
            for k in 1..=n {
                let delta = if j == k { p.clone() } else { SpinorPolynomial::zero(n) };
                let mixed = p.create(k)?.annihilate(j)?.add(&p.annihilate(j)?.create(k)?)?;
                let ff = p.annihilate(k)?.annihilate(j)?.add(&p.annihilate(j)?.annihilate(k)?)?;
                let fdfd = p.create(k)?.create(j)?.add(&p.create(j)?.create(k)?)?;
                zero_or(&mut bad, mixed == delta, format!("seed {seed}: duality ({j},{k})"));
                zero_or(&mut bad, ff.is_zero() && fdfd.is_zero(), format!("seed {seed}: Grassmann ({j},{k})"));
                identities += 3;
            }
        }
        for al in 1..=2 * n {
            for be in 1..=2 * n {
                let lhs = gamma(&gamma(&p, be, n)?, al, n)?.add(&gamma(&gamma(&p, al, n)?, be, n)?)?;
                let rhs = if al == be { p.scale(&GaussianRational::from_int(-2)) } else { SpinorPolynomial::zero(n) };
                zero_or(&mut bad, lhs == rhs, format!("seed {seed}: generators ({al},{be})"));
                identities += 1;
            }
        }
        let iso = [apply_upz(&apply_upz(&p)?)?, apply_upzd(&apply_upzd(&p)?)?, mul_zvec(&mul_zvec(&p)?)?, mul_zdvec(&mul_zdvec(&p)?)?];
        zero_or(&mut bad, iso.iter().all(SpinorPolynomial::is_zero), format!("seed {seed}: isotropy"));
        let four = GaussianRational::from_int(4);
        let lap = laplacian(&p)?;
        let fact = apply_upz(&apply_upzd(&p)?)?.add(&apply_upzd(&apply_upz(&p)?)?)?.scale(&four);
        zero_or(&mut bad, fact == lap, format!("seed {seed}: Laplacian factorization"));
        zero_or(&mut bad, apply_dirac(&apply_dirac(&p)?)?.neg() == lap, format!("seed {seed}: -dirac^2 = Laplacian"));
        let dual = mul_zvec(&mul_zdvec(&p)?)?.add(&mul_zdvec(&mul_zvec(&p)?)?)?;
        zero_or(&mut bad, dual == p.mul_norm_sqr(), format!("seed {seed}: dual identity"));
        identities += 7;
    }
    Ok((bad.is_empty(), format!("{SAMPLES} seeded polynomials, {identities} identity instances, failing {bad:?}")))
}

fn main() {
    let criteria: [(usize, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut lines = Vec::new();
    let mut all = true;
    for (id, run) in criteria {
        let start = Instant::now();
        let (ok, detail) = run().unwrap_or_else(|e| (false, format!("error: {e}")));
        all &= ok;
        lines.push(format!(
            "criterion {id}: {} ({:.1}s) {detail}",
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        ));
    }
    for l in &lines {
        println!("{l}");
    }
    if !all {
        eprintln!("some acceptance criteria failed");
        std::process::exit(1);
    }
}
