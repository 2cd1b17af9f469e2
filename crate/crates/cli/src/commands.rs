//! Subcommand implementations. Each returns a JSON payload.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use modp_core::charclass::{
    bmu_p_presentation, bo_presentation, bockstein, bso_presentation, bz2_presentation, dim_degree,
    isotropic_grassmannian_chow, isotropic_grassmannian_hodge, jacobian_certificate, restriction_bo2r_to_bo2r,
    restriction_bso_even_to_h, restriction_bso_to_bo2r, restriction_to_k, whitney_sum, GradedPresentation,
    JacobianVariant, RestrictionHom, UClass,
};
use modp_core::exactalg::{elementary_symmetric, CoeffRing, Poly, PolyRing, Ring};
use modp_core::groupdata::{
    flag_poincare, fundamental_degrees, good_primes_excluded, torsion_primes, weyl_length_series, weyl_order,
    Family, GroupSpec,
};
use modp_core::invariants::{
    classical_action, lemma_inv2_check, nakajima_check, verify_presentation, verify_spin, ClaimedPresentation,
};
use modp_core::quillen::{quillen_dim_with, quillen_presentation, spin11_compare, SWRing};

use crate::cache::{Cache, CacheEvent};
use crate::{CliError, Command, GroupArgs, Report};

type CResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

pub fn execute(cmd: &Command, cache: &mut Cache) -> CResult<(Report, CacheEvent)> {
    let (name, params, cached): (&'static str, Value, bool) = match cmd {
        Command::Degrees(g) => ("degrees", to_value(g), false),
        Command::Primes(g) => ("primes", to_value(g), false),
        Command::Weyl(g) => ("weyl", to_value(g), false),
        Command::FlagPoincare(g) => ("flag-poincare", to_value(g), false),
        Command::Invariants { group, n, p, max_degree } => {
            ("invariants", json!({"group": group, "n": n, "p": p, "max_degree": max_degree}), true)
        }
        Command::Inv2Check { base, a, max_degree } => {
            ("inv2-check", json!({"base": base, "a": a, "max_degree": max_degree}), true)
        }
        Command::Ring { name, n, p, max_degree } => {
            ("ring", json!({"name": name, "n": n, "p": p, "max_degree": max_degree}), true)
        }
        Command::Whitney { vars, e, f } => ("whitney", json!({"vars": vars, "e": e, "f": f}), false),
        Command::Restrict { n, to } => ("restrict", json!({"n": n, "to": to}), false),
        Command::Jacobian { r, variant } => ("jacobian", json!({"r": r, "variant": variant}), true),
        Command::Quillen { n, dims } => ("quillen", json!({"n": n, "dims": dims}), true),
        Command::SpinCompare => ("spin-compare", json!({}), true),
        Command::Selftest { seed, trials } => ("selftest", json!({"seed": seed, "trials": trials}), false),
    };
    let compute = || -> CResult<Value> {
        match cmd {
            Command::Degrees(g) => degrees(g),
            Command::Primes(g) => primes(g),
            Command::Weyl(g) => weyl(g),
            Command::FlagPoincare(g) => flag(g),
            Command::Invariants { group, n, p, max_degree } => invariants(group, *n, *p, *max_degree),
            Command::Inv2Check { base, a, max_degree } => inv2(base, a, *max_degree),
            Command::Ring { name, n, p, max_degree } => ring(name, *n, *p, *max_degree),
            Command::Whitney { vars, e, f } => whitney(vars, e, f),
            Command::Restrict { n, to } => restrict(*n, to),
            Command::Jacobian { r, variant } => jacobian(*r, variant),
            Command::Quillen { n, dims } => quillen(*n, dims),
            Command::SpinCompare => Ok(to_value(&spin11_compare()?)),
            Command::Selftest { seed, trials } => selftest(*seed, *trials),
        }
    };
    let (payload, event) = if cached { cache.roundtrip(name, &params, compute)? } else { (compute()?, CacheEvent::Disabled) };
    Ok((Report { command: name, params, payload }, event))
}

pub fn resolve_group(g: &GroupArgs) -> CResult<GroupSpec> {
    if let Some(name) = &g.group {
        return Ok(GroupSpec::parse(name)?);
    }
    let family: Family = g
        .family
        .as_deref()
        .ok_or_else(|| usage("give --group, or --family with --rank or --n"))?
        .parse()?;
    if family.is_exceptional() {
        return Ok(GroupSpec::exceptional(family)?);
    }
    let n = if family.is_matrix_group() { g.n.or(g.rank) } else { g.rank.or(g.n) };
    let n = n.ok_or_else(|| usage(format!("{} needs --rank or --n", family.name())))?;
    Ok(GroupSpec::new(family, n)?)
}

fn degrees(g: &GroupArgs) -> CResult<Value> {
    let spec = resolve_group(g)?;
    let d = fundamental_degrees(&spec);
    Ok(json!({"group": spec.to_string(), "degrees": d.degrees(), "weyl_order": d.product().to_string()}))
}

fn primes(g: &GroupArgs) -> CResult<Value> {
    let spec = resolve_group(g)?;
    let bad: Vec<u64> = good_primes_excluded(&spec).into_iter().collect();
    let torsion: Vec<u64> = torsion_primes(&spec).into_iter().collect();
    Ok(json!({"group": spec.to_string(), "bad": bad, "torsion": torsion}))
}

fn weyl(g: &GroupArgs) -> CResult<Value> {
    let spec = resolve_group(g)?;
    let series = weyl_length_series(&spec)?;
    let counts = series.to_polynomial().unwrap_or_default();
    let flag = flag_poincare(&spec).to_polynomial().unwrap_or_default();
    let order = weyl_order(&spec);
    let total: i128 = counts.iter().sum();
    Ok(json!({
        "group": spec.to_string(),
        "order": order.to_string(),
        "length_counts": counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "pass": counts == flag && total == order as i128,
    }))
}

fn flag(g: &GroupArgs) -> CResult<Value> {
    let spec = resolve_group(g)?;
    let s = flag_poincare(&spec);
    let coeffs = s.to_polynomial().ok_or_else(|| CliError::Failed("flag series is not a polynomial".into()))?;
    let at_one = s.eval_at_one().unwrap_or(0);
    Ok(json!({
        "group": spec.to_string(),
        "coefficients": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "at_one": at_one.to_string(),
        "pass": at_one == weyl_order(&spec) as i128,
    }))
}

/// Invariants of the signed permutation action for B, C, D against the
/// polynomial ring on `e_a(x_1^2, ..., x_r^2)` (and `x_1...x_r` for D).
fn classical_claim(family: Family, action: &modp_core::invariants::WeylAction) -> CResult<ClaimedPresentation> {
    let r = action.torus_rank();
    let ring = action.ring().clone();
    let squares: Vec<Poly> = (1..=r).map(|i| action.x(i) * action.x(i)).collect();
    let mut gens = Vec::new();
    let top = if family == Family::D { r - 1 } else { r };
    for a in 1..=top {
        gens.push((format!("p{}", 2 * a), elementary_symmetric(&ring, a, &squares)));
    }
    if family == Family::D {
        let prod = (1..=r).fold(Poly::one(&ring), |acc, i| &acc * action.x(i));
        gens.push((format!("e{r}"), prod));
    }
    Ok(ClaimedPresentation::polynomial(&format!("{} symmetric in squares", action.label), gens)?)
}

fn invariants(group: &str, n: usize, p: u64, max_degree: u32) -> CResult<Value> {
    let report = match group.to_ascii_lowercase().as_str() {
        "spin" => {
            if p != 2 {
                return Err(usage("the spin model is implemented in characteristic 2 only"));
            }
            verify_spin(n, max_degree)?
        }
        "symmetric" | "s" => nakajima_check(n, max_degree)?,
        other => {
            let family: Family = other.parse()?;
            if !matches!(family, Family::B | Family::C | Family::D) {
                return Err(usage(format!("invariants supports spin, symmetric, B, C, D; got {group}")));
            }
            let action = classical_action(family, n, p)?;
            let claim = classical_claim(family, &action)?;
            verify_presentation(&action, &claim, max_degree)?
        }
    };
    Ok(to_value(&report))
}

fn parse_vars(spec: &str) -> CResult<Vec<(String, u32)>> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| match item.split_once(':') {
            Some((name, d)) => {
                let d: u32 = d.trim().parse().map_err(|_| usage(format!("bad degree in '{item}'")))?;
                Ok((name.trim().to_string(), d))
            }
            None => Ok((item.to_string(), 1)),
        })
        .collect()
}

fn inv2(base: &str, a: &str, max_degree: u32) -> CResult<Value> {
    let vars = parse_vars(base)?;
    let refs: Vec<(&str, u32)> = vars.iter().map(|(n, d)| (n.as_str(), *d)).collect();
    Ok(to_value(&lemma_inv2_check(&refs, a, max_degree)?))
}

fn named_presentation(name: &str, n: Option<u32>, p: Option<u64>) -> CResult<GradedPresentation> {
    let need_n = || n.ok_or_else(|| usage(format!("ring {name} needs --n")));
    Ok(match name.to_ascii_lowercase().as_str() {
        "bso" => bso_presentation(need_n()?)?,
        "bo" => bo_presentation(need_n()?)?,
        "bmu" => bmu_p_presentation(p.unwrap_or(2))?,
        "bz2" => bz2_presentation()?,
        "og-chow" => isotropic_grassmannian_chow(need_n()?, p.unwrap_or(2))?,
        "og-hodge" => isotropic_grassmannian_hodge(need_n()?)?,
        other => return Err(usage(format!("unknown ring '{other}' (bso, bo, bmu, bz2, og-chow, og-hodge)"))),
    })
}

fn ring(name: &str, n: Option<u32>, p: Option<u64>, max_degree: u32) -> CResult<Value> {
    let pres = named_presentation(name, n, p)?;
    let dims = (0..=max_degree).map(|d| dim_degree(&pres, d)).collect::<Result<Vec<_>, _>>()?;
    let series = pres.series().ok().map(|s| s.coefficients(max_degree as usize));
    let pass = series.as_ref().is_none_or(|s| s.iter().zip(&dims).all(|(a, b)| *a == *b as i128));
    let rows: Vec<Value> = dims
        .iter()
        .enumerate()
        .map(|(d, &dim)| {
            let mut row = json!({"degree": d, "dim": dim});
            if let Some(s) = &series {
                row["series"] = json!(s[d].to_string());
            }
            row
        })
        .collect();
    Ok(json!({"presentation": to_value(&pres.to_json()), "rows": rows, "pass": pass}))
}

fn whitney(vars: &str, e: &str, f: &str) -> CResult<Value> {
    let vars = parse_vars(vars)?;
    let names: Vec<&str> = vars.iter().map(|v| v.0.as_str()).collect();
    let weights: Vec<u32> = vars.iter().map(|v| v.1).collect();
    let ring = PolyRing::new(&names, &weights, CoeffRing::F2)?;
    let class = |text: &str| -> CResult<UClass> {
        let mut comps = vec![Poly::one(&ring)];
        for c in text.split(';') {
            let c = c.trim();
            comps.push(if c.is_empty() { Poly::zero(&ring) } else { Poly::parse(&ring, c)? });
        }
        Ok(UClass::new(comps)?)
    };
    let sum = whitney_sum(&class(e)?, &class(f)?)?;
    Ok(json!({"components": sum.components().iter().map(|c| c.to_string()).collect::<Vec<_>>()}))
}

fn restriction_payload(res: &RestrictionHom) -> Value {
    let images: Vec<Value> = res
        .source
        .generators()
        .iter()
        .enumerate()
        .map(|(v, g)| json!({"class": g.name, "image": res.hom.image(v).map(|p| p.to_string()).unwrap_or_default()}))
        .collect();
    json!({
        "label": res.label,
        "target": res.target.ring().names(),
        "radical_quotient": res.radical_quotient,
        "images": images,
    })
}

fn restrict(n: u32, to: &str) -> CResult<Value> {
    let res = match to.to_ascii_lowercase().as_str() {
        "bo2r" => restriction_bso_to_bo2r(n)?,
        "bo" => {
            if n % 2 == 1 {
                return Err(usage("--to bo takes the even matrix size 2r"));
            }
            restriction_bo2r_to_bo2r((n / 2) as usize)?
        }
        "h" => {
            if n % 2 == 1 {
                return Err(usage("--to h takes the even matrix size 2r"));
            }
            restriction_bso_even_to_h((n / 2) as usize)?
        }
        "k" => restriction_to_k(n)?,
        other => return Err(usage(format!("unknown restriction target '{other}' (bo2r, bo, h, k)"))),
    };
    Ok(restriction_payload(&res))
}

fn jacobian(r: usize, variant: &str) -> CResult<Value> {
    let v: JacobianVariant = variant.parse()?;
    Ok(to_value(&jacobian_certificate(r, v)?))
}

pub fn parse_range(s: &str) -> CResult<(u32, u32)> {
    let bad = || usage(format!("bad degree range '{s}' (use a..b or d)"));
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let d = num(s)?;
            (d, d)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn quillen(n: u32, dims: &str) -> CResult<Value> {
    let (lo, hi) = parse_range(dims)?;
    let q = quillen_presentation(n)?;
    let graded = q.to_graded()?;
    let series = q.series();
    let mut rows = Vec::new();
    for d in lo..=hi {
        let dim = quillen_dim_with(&q, &graded, d)?;
        rows.push(json!({"degree": d, "dim": dim, "series": series.coefficient(d as usize).to_string()}));
    }
    Ok(json!({"presentation": to_value(&q.summary()), "rows": rows, "pass": true}))
}

fn random_poly(ring: &Ring, rng: &mut ChaCha8Rng, degree: u32, terms: usize) -> Poly {
    let mut out = Poly::zero(ring);
    for _ in 0..terms {
        let mut exps = vec![0u32; ring.nvars()];
        let mut left = degree;
        for _ in 0..64 {
            if left == 0 {
                break;
            }
            let v = rng.gen_range(0..ring.nvars());
            if ring.weight(v) <= left {
                exps[v] += 1;
                left -= ring.weight(v);
            }
        }
        if left == 0 {
            out = &out + &Poly::monomial(ring, ring.monomial(&exps));
        }
    }
    out
}

fn selftest(seed: u64, trials: usize) -> CResult<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks: Vec<(String, bool)> = Vec::new();

    let sw = SWRing::bo(8)?;
    let mut cartan = true;
    let mut unstable = true;
    for _ in 0..trials {
        let (df, dg) = (rng.gen_range(1..6), rng.gen_range(1..6));
        let f = random_poly(sw.ring(), &mut rng, df, 3);
        let g = random_poly(sw.ring(), &mut rng, dg, 3);
        let i = rng.gen_range(0..=df + dg);
        let mut rhs = Poly::zero(sw.ring());
        for a in 0..=i {
            rhs = &rhs + &(&sw.sq(a, &f)? * &sw.sq(i - a, &g)?);
        }
        cartan &= sw.sq(i, &(&f * &g))? == rhs;
        unstable &= f.is_zero() || (sw.sq(df, &f)? == &f * &f && sw.sq(df + 1, &f)?.is_zero());
    }
    checks.push(("Cartan formula for Sq".into(), cartan));
    checks.push(("unstable axioms for Sq".into(), unstable));

    let b = bockstein(3)?;
    let mut leibniz = true;
    let mut square_zero = true;
    for _ in 0..trials {
        let (df, dg) = (rng.gen_range(0..6), rng.gen_range(0..6));
        let f = random_poly(b.ring(), &mut rng, df, 3);
        let g = random_poly(b.ring(), &mut rng, dg, 3);
        let (bf, bg) = (b.apply(&f)?, b.apply(&g)?);
        leibniz &= b.apply(&(&f * &g))? == &(&bf * &g) + &(&f * &bg);
        square_zero &= b.apply(&bf)?.is_zero();
    }
    checks.push(("Bockstein is a derivation".into(), leibniz));
    checks.push(("Bockstein squares to zero".into(), square_zero));

    let ring = PolyRing::indexed("a", 1, 3, CoeffRing::F2)?;
    let mut comm = true;
    let mut assoc = true;
    for _ in 0..trials {
        let mut class = || -> CResult<UClass> {
            let mut comps = vec![Poly::one(&ring)];
            for m in 1..=8 {
                let t = rng.gen_range(0..=2);
                comps.push(random_poly(&ring, &mut rng, m, t));
            }
            Ok(UClass::new(comps)?)
        };
        let (e, f, g) = (class()?, class()?, class()?);
        let ef = whitney_sum(&e, &f)?;
        comm &= ef == whitney_sum(&f, &e)?;
        assoc &= whitney_sum(&ef, &g)? == whitney_sum(&e, &whitney_sum(&f, &g)?)?;
    }
    checks.push(("Whitney sum is commutative".into(), comm));
    checks.push(("Whitney sum is associative".into(), assoc));

    for r in 2..=4 {
        let o = jacobian_certificate(r, JacobianVariant::O)?;
        let so = jacobian_certificate(r, JacobianVariant::SO)?;
        checks.push((format!("Jacobian certificates r={r}"), o.pass && so.pass));
    }
    checks.push(("Spin(7) invariants to degree 8".into(), verify_spin(7, 8)?.pass));
    checks.push(("S_3 quotient invariants to degree 8".into(), nakajima_check(3, 8)?.pass));

    let pass = checks.iter().all(|c| c.1);
    let rows: Vec<Value> = checks.into_iter().map(|(name, ok)| json!({"check": name, "ok": ok})).collect();
    Ok(json!({"seed": seed, "trials": trials, "checks": rows, "pass": pass}))
}
