//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails.
//!
//! Every comparison is exact (integers and rationals, no tolerance). The
//! only pinned limit is the wall-clock budget for the F4 census.

#![allow(clippy::absurd_extreme_comparisons, clippy::mutable_key_type)]

mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use spherical::io::{emit_system, parse_system};
use spherical::quotient::{integer_witness, oracle_bound, positive_witness};
use spherical::*;

/// Wall-clock budget for enumerating the F4 census.
const CENSUS_BUDGET: Duration = Duration::from_secs(300);
/// Exact match is required for every count and table.
const COUNT_TOLERANCE: usize = 0;
/// Random multiplicity vectors tried per system in suite (d).
const OMEGA_CASES: u32 = 64;
/// Largest random count per color in suite (d).
const OMEGA_MAX_COUNT: u32 = 6;

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn counts_match(found: usize, expected: usize) -> bool {
    found.abs_diff(expected) <= COUNT_TOLERANCE
}

struct Ctx {
    f4: Arc<RootSystem>,
    census: CensusReport,
    census_time: Duration,
}

impl Ctx {
    fn new() -> Self {
        let f4 = f4();
        let t = Instant::now();
        let mut census = enumerate_systems(f4.clone(), None);
        let census_time = t.elapsed();
        census.compute_flags();
        Ctx {
            f4,
            census,
            census_time,
        }
    }
}

fn c1(ctx: &Ctx) -> Check {
    let diff = ctx.census.diff(&F4_CENSUS);
    ensure(diff.is_empty(), format!("per-rank diff {diff:?}"))?;
    ensure(
        counts_match(ctx.census.total, 266),
        format!("total {}", ctx.census.total),
    )?;
    ensure(
        ctx.census_time <= CENSUS_BUDGET,
        format!("took {:?}", ctx.census_time),
    )?;
    let distinct: BTreeSet<_> = ctx.census.systems.iter().map(|s| s.key()).collect();
    ensure(
        distinct.len() == ctx.census.total,
        "duplicate canonical forms",
    )?;
    Ok(format!(
        "{:?} total {} in {:?}",
        ctx.census.by_rank, ctx.census.total, ctx.census_time
    ))
}

fn c2(ctx: &Ctx) -> Check {
    let expected: BTreeSet<Vec<i64>> = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [2, 0, 0, 0],
        [0, 2, 0, 0],
        [0, 0, 2, 0],
        [0, 0, 0, 2],
        [1, 0, 1, 0],
        [1, 0, 0, 1],
        [0, 1, 0, 1],
        [1, 1, 0, 0],
        [0, 0, 1, 1],
        [0, 1, 1, 0],
        [0, 2, 2, 0],
        [1, 1, 1, 0],
        [2, 2, 2, 0],
        [1, 2, 3, 0],
        [0, 1, 2, 1],
        [1, 2, 3, 2],
    ]
    .iter()
    .map(|v| v.to_vec())
    .collect();
    let found: Vec<Vec<i64>> = spherical_roots_of(&ctx.f4)
        .into_iter()
        .map(|r| r.vector)
        .collect();
    let set: BTreeSet<Vec<i64>> = found.iter().cloned().collect();
    ensure(
        found.len() == 20 && set == expected,
        format!("got {} roots", found.len()),
    )?;
    Ok("20 spherical roots, set equality".into())
}

fn c3(_: &Ctx) -> Check {
    let mut checked = Vec::new();

    let e1 = b4_doubled();
    let t = table(&e1, &e1.sigma.clone());
    ensure(
        t == sorted(&[&[2, -1, 0], &[-1, 2, -1], &[0, -2, 2]]),
        format!("B4 doubled: {t:?}"),
    )?;
    checked.push("B4 3x3");

    let e3 = a4_shared();
    let order = vecs(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
    let a = a_table(&e3, &order);
    ensure(
        a == sorted(&[&[1, -1, 1], &[1, 0, -1], &[0, 1, -1], &[-1, 1, 1]]),
        format!("A4 shared A: {a:?}"),
    )?;
    let t = table(&e3, &order);
    ensure(
        t == sorted(&[
            &[1, -1, 1],
            &[1, 0, -1],
            &[0, 1, -1],
            &[-1, 1, 1],
            &[0, -1, -1],
        ]),
        format!("A4 shared full: {t:?}"),
    )?;
    checked.push("A4 4x3+5x3");

    let e4 = f4_three_roots();
    let order = vecs(&[&[1, 0, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
    let t = table(&e4, &order);
    ensure(
        t == sorted(&[
            &[1, 0, 0],
            &[1, -1, 0],
            &[-1, 1, -1],
            &[0, 0, 1],
            &[0, -1, 1],
        ]),
        format!("F4 three roots: {t:?}"),
    )?;
    checked.push("F4 5x3");

    let r2 = rank_two();
    let t = table(&r2, &vecs(&[&[1, 0, 0, 1], &[0, 1, 1, 0]]));
    ensure(
        t == sorted(&[&[2, -1], &[-1, 1], &[-1, 0]]),
        format!("rank 2: {t:?}"),
    )?;
    checked.push("rank-2 3x2");

    let s = s12();
    let order = vecs(&[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    let t = table(&s, &order);
    ensure(
        t == sorted(&[
            &[1, -1, 0, 0],
            &[1, 1, -1, 0],
            &[0, 0, 1, -1],
            &[-2, 0, 1, 0],
            &[0, 0, -1, 1],
            &[0, -1, 0, 1],
        ]),
        format!("S_12: {t:?}"),
    )?;
    checked.push("S12 6x4");

    let sl = sl4();
    let t = table(&sl, &sl.sigma.clone());
    ensure(
        t == sorted(&[
            &[1, -1, 1],
            &[1, 0, -1],
            &[0, 1, 0],
            &[-1, 1, -1],
            &[-1, 0, 1],
        ]),
        format!("SL(4): {t:?}"),
    )?;
    checked.push("SL4 5x3");

    let b = b3();
    let t = table(&b, &b.sigma.clone());
    ensure(
        t == sorted(&[&[1, 1, -1], &[1, -2, 1], &[-2, 1, 0], &[-1, 0, 1]]),
        format!("B3: {t:?}"),
    )?;
    checked.push("B3 4x3");

    Ok(checked.join(", "))
}

fn c4(_: &Ctx) -> Check {
    let sys = sl4();
    let c = |row: &[i64]| color_with_row(&sys, row);
    let (d1p, d1m, d2p, d2m, d3m) = (
        c(&[1, -1, 1]),
        c(&[1, 0, -1]),
        c(&[0, 1, 0]),
        c(&[-1, 1, -1]),
        c(&[-1, 0, 1]),
    );
    let set = |v: &[usize]| -> Vec<usize> {
        let mut v = v.to_vec();
        v.sort_unstable();
        v
    };
    let named: [(&str, Vec<usize>, Vec<RootVector>); 5] = [
        ("D1", set(&[d1p, d2m]), vecs(&[&[1, 1, 0], &[0, 1, 1]])),
        ("D2", set(&[d1m, d3m]), vecs(&[&[1, 0, 1], &[0, 1, 0]])),
        ("D3", set(&[d2p]), vecs(&[&[1, 0, 0], &[0, 0, 1]])),
        ("D12", set(&[d1p, d2m, d1m, d3m]), vecs(&[&[1, 2, 1]])),
        ("D23", set(&[d1m, d3m, d2p]), vecs(&[&[1, 0, 1]])),
    ];
    let found: BTreeSet<Vec<usize>> = enumerate_distinguished(&sys)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|d| d.members)
        .collect();
    for (name, members, expected) in &named {
        ensure(found.contains(members), format!("{name} not found"))?;
        let q = quotient(&sys, members).map_err(|e| format!("{name}: {e}"))?;
        let got: BTreeSet<_> = q.sigma.iter().cloned().collect();
        let want: BTreeSet<_> = expected.iter().cloned().collect();
        ensure(got == want, format!("{name}: quotient {:?}", q.sigma))?;
    }
    Ok(format!(
        "5 named subsets among {} distinguished, quotients match",
        found.len()
    ))
}

fn c5(_: &Ctx) -> Check {
    let sys = rank_two().canonical_form();
    let cs = sys.colors().map_err(|e| e.to_string())?;
    let all = enumerate_distinguished(&sys).map_err(|e| e.to_string())?;
    ensure(
        all.iter().any(|d| d.members.len() == cs.len()),
        "full color set not distinguished",
    )?;
    // The full color set is always distinguished and gives the trivial quotient.
    let ds: Vec<DistinguishedSubset> = all
        .into_iter()
        .filter(|d| d.members.len() < cs.len())
        .collect();
    ensure(
        ds.len() == 1,
        format!("{} proper distinguished subsets", ds.len()),
    )?;
    let owners: BTreeSet<Vec<usize>> = ds[0]
        .members
        .iter()
        .map(|&i| cs.colors[i].owners().labels())
        .collect();
    let want: BTreeSet<Vec<usize>> = [vec![1, 4], vec![2]].into_iter().collect();
    ensure(owners == want, format!("members owned by {owners:?}"))?;
    let q = quotient(&sys, &ds[0].members).map_err(|e| e.to_string())?;
    ensure(
        q.sigma.is_empty() && q.sp == labels(&[1, 2, 4]),
        format!("quotient ({:?}, {})", q.sigma, q.sp),
    )?;
    let kind = classify(&sys, &ds[0].members).map_err(|e| e.to_string())?;
    ensure(kind == EdgeKind::L, format!("edge {kind}"))?;
    let dim = sys.dimension().map_err(|e| e.to_string())?;
    ensure(dim == 26, format!("dimension {dim}"))?;
    Ok("one proper subset {d_a1, d_a2}, quotient (empty, {a1,a2,a4}), type L, dimension 26".into())
}

fn c6(ctx: &Ctx) -> Check {
    let sys = rank_one().canonical_form();
    ensure(err(sys.dimension())? == 16, "dimension")?;
    ensure(err(sys.defect())? == 0, "defect")?;
    ensure(err(is_strict(&sys))?, "not strict")?;
    ensure(err(sys.is_cuspidal())?, "not cuspidal")?;
    let forest = err(quotient_forest(&ctx.census.systems, &sys))?;
    let found = &forest.nodes[1..];
    let mut defects: Vec<i64> = found.iter().map(|s| s.defect().unwrap_or(-1)).collect();
    defects.sort_unstable_by(|a, b| b.cmp(a));
    ensure(
        found.len() == 5 && defects == [2, 1, 1, 1, 1],
        format!("{} systems, defects {defects:?}", found.len()),
    )?;
    ensure(found.contains(&s12().canonical_form()), "S_12 missing")?;
    let dot = render_dot(&forest);
    ensure(
        dot.matches("style=dashed").count() == forest.edges.len(),
        "forest edges not all of type P",
    )?;
    Ok(format!(
        "dim 16, defect 0, strict, cuspidal; 5 systems over it with defects {defects:?}"
    ))
}

/// Follows `steps` single-color quotients, each color given by its row.
fn chain(
    start: SphericalSystem,
    steps: &[(&[i64], SphericalSystem)],
) -> std::result::Result<(), String> {
    let mut cur = start.canonical_form();
    for (k, (row, next)) in steps.iter().enumerate() {
        let projective = projective_colors(&cur).map_err(|e| e.to_string())?;
        let col = color_with_row(&cur, row);
        ensure(
            projective.iter().any(|&(i, _)| i == col),
            format!("step {k}: color {row:?} not projective"),
        )?;
        let q = quotient(&cur, &[col]).map_err(|e| format!("step {k}: {e}"))?;
        ensure(
            q == next.canonical_form(),
            format!("step {k}: got {:?}", q.sigma),
        )?;
        cur = q;
    }
    Ok(())
}

fn c7(ctx: &Ctx) -> Check {
    let rank4 = ctx
        .census
        .systems
        .iter()
        .zip(&ctx.census.flags)
        .filter(|(s, _)| s.rank() == 4);
    let (total, ss) = rank4.fold((0, 0), |(t, s), (_, f)| {
        (t + 1, s + usize::from(f.strongly_solvable))
    });
    ensure(
        total == 71 && counts_match(ss, 38),
        format!("{ss} of {total}"),
    )?;

    let f4 = f4();
    let all = vecs(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    let all: Vec<&[i64]> = all.iter().map(|v| v.as_slice()).collect();
    let flag = SphericalSystem::homogeneous(f4.clone(), SimpleSet::EMPTY);

    let two = system(
        &f4,
        &all,
        &[],
        &[
            &[1, -1, 1, 0],
            &[1, 0, -1, 0],
            &[-1, -1, 1, -1],
            &[0, 1, 0, 1],
            &[-1, 1, -1, -1],
            &[0, -1, -1, 1],
        ],
    );
    let two_mid = system(
        &f4,
        &[&[1, 0, 0, 0], &[0, 0, 1, 0]],
        &[],
        &[&[1, 1], &[1, -1], &[-1, 1]],
    );
    ensure(
        two.is_valid(),
        format!("first chain start invalid: {:?}", two.validate()),
    )?;
    chain(two, &[(&[0, 1, 0, 1], two_mid), (&[1, 1], flag.clone())])
        .map_err(|e| format!("chain 1: {e}"))?;

    let three = system(
        &f4,
        &all,
        &[],
        &[
            &[1, 0, 0, 0],
            &[1, -1, 0, 0],
            &[0, 0, 1, 0],
            &[0, -2, 1, -1],
            &[0, 1, -1, 1],
            &[-1, 1, 0, -1],
            &[0, -1, 0, 1],
        ],
    );
    let three_a = system(
        &f4,
        &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
        &[],
        &[
            &[1, -1, 1],
            &[0, 1, 0],
            &[1, 0, -1],
            &[-2, 1, -1],
            &[-1, 0, 1],
        ],
    );
    let three_b = system(
        &f4,
        &[&[0, 1, 0, 0], &[0, 0, 0, 1]],
        &[],
        &[&[1, 1], &[1, -1], &[-1, 1]],
    );
    ensure(
        three.is_valid(),
        format!("second chain start invalid: {:?}", three.validate()),
    )?;
    chain(
        three,
        &[
            (&[1, 0, 0, 0], three_a),
            (&[0, 1, 0], three_b),
            (&[1, 1], flag),
        ],
    )
    .map_err(|e| format!("chain 2: {e}"))?;
    Ok(format!(
        "{ss} of {total} rank-4 systems; both example chains reproduced"
    ))
}

fn c8(ctx: &Ctx) -> Check {
    let open: Vec<&SphericalSystem> = ctx
        .census
        .systems
        .iter()
        .zip(&ctx.census.flags)
        .filter(|(_, f)| !f.spherically_closed)
        .map(|(s, _)| s)
        .collect();
    ensure(
        counts_match(open.len(), 3),
        format!("{} not spherically closed", open.len()),
    )?;
    let names: Vec<String> = open
        .iter()
        .map(|s| {
            s.sigma
                .iter()
                .map(|v| format_root(v))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    Ok(format!(
        "3 of 266 not spherically closed: [{}]",
        names.join("] [")
    ))
}

fn c9(ctx: &Ctx) -> Check {
    let mut counts = Vec::new();
    for i in 0..4 {
        let mut pi = vec![0; 4];
        pi[i] = 1;
        let couples =
            faithful_couples_in(&ctx.census.systems, &ctx.f4, &pi).map_err(|e| e.to_string())?;
        ensure(
            couples.iter().all(|c| c.gamma_order == 1),
            format!("w{}: nontrivial Gamma", i + 1),
        )?;
        counts.push(couples.len());
    }
    ensure(counts == [3, 10, 8, 3], format!("F4 counts {counts:?}"))?;
    let a3 = faithful_couples(rs(Family::A, 3), &[1, 0, 1]).map_err(|e| e.to_string())?;
    ensure(a3.len() == 5, format!("A3 count {}", a3.len()))?;
    Ok(format!(
        "F4 {counts:?}, trivial Gamma; A3 w1+w3: {}",
        a3.len()
    ))
}

fn c10(ctx: &Ctx) -> Check {
    let expected: [(&str, i64, &[usize]); 4] = [
        ("C3", 2, &[14, 1]),
        ("A1×A2", 3, &[12, 6, 2]),
        ("A2×A1", 4, &[6, 9, 2, 3]),
        ("B3", 2, &[8, 7]),
    ];
    for (alpha, (levi, s, dims)) in expected.iter().enumerate() {
        let g = ctx.f4.parabolic_grading(alpha).map_err(|e| e.to_string())?;
        ensure(
            g.levi_type.to_string() == *levi && g.s == *s && g.dims == *dims,
            format!(
                "alpha{}: ({}; {}; {:?})",
                alpha + 1,
                g.levi_type,
                g.s,
                g.dims
            ),
        )?;
    }
    Ok("(C3;2;14,1) (A1×A2;3;12,6,2) (A2×A1;4;6,9,2,3) (B3;2;8,7)".into())
}

fn c11(ctx: &Ctx) -> Check {
    let expected: [[i64; 4]; 4] = [[2, 3, 4, 2], [3, 6, 8, 4], [2, 4, 6, 3], [1, 2, 3, 2]];
    let w = ctx.f4.fundamental_weights();
    for (i, e) in expected.iter().enumerate() {
        let want: Vec<Q> = e.iter().map(|&x| Q::from_integer(x)).collect();
        ensure(w[i] == want, format!("omega{} = {:?}", i + 1, w[i]))?;
    }
    Ok("omega1..omega4 exact".into())
}

fn census_of(
    spec: &RootSystemSpec,
    cache: &mut HashMap<String, BTreeSet<SphericalSystem>>,
) -> BTreeSet<SphericalSystem> {
    cache
        .entry(spec.to_string())
        .or_insert_with(|| {
            let rs = Arc::new(build_root_system(spec).expect("recognized type"));
            enumerate_systems(rs, None).systems.into_iter().collect()
        })
        .clone()
}

fn suite_a(ctx: &Ctx) -> std::result::Result<usize, String> {
    let mut cache = HashMap::new();
    let mut n = 0;
    for s in &ctx.census.systems {
        for mask in 0..(1u32 << 4) {
            let loc = s.localize_s(SimpleSet(mask)).canonical_form();
            let census = census_of(&loc.rs.spec, &mut cache);
            ensure(
                census.contains(&loc),
                format!(
                    "localization of {:?} at {} not in census",
                    s.sigma,
                    SimpleSet(mask)
                ),
            )?;
            n += 1;
        }
        for mask in 0..(1u32 << s.rank()) {
            let keep: Vec<RootVector> = (0..s.rank())
                .filter(|j| mask >> j & 1 == 1)
                .map(|j| s.sigma[j].clone())
                .collect();
            let loc = s
                .localize_sigma(&keep)
                .map_err(|e| e.to_string())?
                .canonical_form();
            ensure(
                ctx.census.systems.binary_search(&loc).is_ok(),
                format!("Sigma-localization of {:?}", s.sigma),
            )?;
            n += 1;
        }
    }
    Ok(n)
}

fn suite_b(ctx: &Ctx) -> std::result::Result<usize, String> {
    let mut n = 0;
    for s in &ctx.census.systems {
        for e in quotient_edges(s).map_err(|e| format!("{:?}: {e}", s.sigma))? {
            ensure(
                e.target.is_valid(),
                format!("invalid quotient of {:?}", s.sigma),
            )?;
            ensure(
                ctx.census.systems.binary_search(&e.target).is_ok(),
                "quotient outside census",
            )?;
            n += 1;
        }
    }
    Ok(n)
}

fn suite_c(ctx: &Ctx) -> std::result::Result<usize, String> {
    let mut n = 0;
    for s in &ctx.census.systems {
        let cs = s.colors().map_err(|e| e.to_string())?;
        let bound = oracle_bound(&cs, s.rank());
        for mask in 1u64..(1u64 << cs.len()) {
            let rows: Vec<&[i64]> = (0..cs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| cs.colors[i].row.as_slice())
                .collect();
            let rational = positive_witness(&rows);
            let integer = integer_witness(&rows, bound);
            ensure(
                rational.is_some() == integer.is_some(),
                format!("disagreement on {:?} mask {mask:b}", s.sigma),
            )?;
            if let Some(w) = rational {
                for j in 0..s.rank() {
                    let v: Q = rows
                        .iter()
                        .zip(&w)
                        .map(|(r, x)| Q::from_integer(r[j]) * x)
                        .sum();
                    ensure(
                        v >= Q::from_integer(0) && w.iter().all(|x| *x > Q::from_integer(0)),
                        "bad witness",
                    )?;
                }
            }
            n += 1;
        }
    }
    Ok(n)
}

fn suite_d(ctx: &Ctx) -> std::result::Result<usize, String> {
    let mut systems: Vec<SphericalSystem> = ctx.census.systems.clone();
    for (family, rank) in [(Family::B, 3), (Family::A, 3), (Family::C, 3)] {
        systems.extend(enumerate_systems(rs(family, rank), None).systems);
    }
    let mut n = 0;
    let mut nontrivial = 0;
    for s in systems
        .iter()
        .filter(|s| is_spherically_closed(s).unwrap_or(false))
    {
        let cs = s.colors().map_err(|e| e.to_string())?;
        let gamma = gamma_group(s).map_err(|e| e.to_string())?;
        nontrivial += usize::from(gamma.order() > 1);
        for g in &gamma.elements {
            for (i, &gi) in g.iter().enumerate() {
                ensure(
                    cs.colors[i].row == cs.colors[gi].row,
                    "Gamma does not preserve the pairing",
                )?;
                ensure(
                    cs.colors[i].owners() == cs.colors[gi].owners(),
                    "Gamma does not preserve Delta(alpha)",
                )?;
            }
        }
        let mut runner = TestRunner::new(Config {
            cases: OMEGA_CASES,
            failure_persistence: None,
            ..Config::default()
        });
        let len = cs.len();
        runner
            .run(
                &proptest::collection::vec(0..=OMEGA_MAX_COUNT, len),
                |counts| {
                    let base = omega_of(s, &counts).expect("valid");
                    for g in &gamma.elements {
                        let mut moved = vec![0; len];
                        for (i, &gi) in g.iter().enumerate() {
                            moved[gi] = counts[i];
                        }
                        prop_assert_eq!(&omega_of(s, &moved).expect("valid"), &base);
                    }
                    Ok(())
                },
            )
            .map_err(|e| format!("{:?}: {e}", s.sigma))?;
        n += 1;
    }
    ensure(nontrivial > 0, "no system with nontrivial Gamma exercised")?;
    Ok(n)
}

fn suite_e(ctx: &Ctx) -> std::result::Result<usize, String> {
    for s in &ctx.census.systems {
        let text = emit_system(s);
        let back = parse_system(&text, false).map_err(|e| e.to_string())?;
        ensure(
            &back == s && back.key() == s.key(),
            format!("round trip of {:?}", s.sigma),
        )?;
        ensure(emit_system(&back) == text, "emission not stable")?;
    }
    Ok(ctx.census.systems.len())
}

fn c12(ctx: &Ctx) -> Check {
    let a = suite_a(ctx).map_err(|e| format!("(a) {e}"))?;
    let b = suite_b(ctx).map_err(|e| format!("(b) {e}"))?;
    let c = suite_c(ctx).map_err(|e| format!("(c) {e}"))?;
    let d = suite_d(ctx).map_err(|e| format!("(d) {e}"))?;
    let e = suite_e(ctx).map_err(|e| format!("(e) {e}"))?;
    Ok(format!("(a) {a} localizations (b) {b} quotients (c) {c} subsets (d) {d} systems (e) {e} round trips"))
}

type Criterion = (&'static str, fn(&Ctx) -> Check);

fn main() -> ExitCode {
    let ctx = Ctx::new();
    let criteria: [Criterion; 12] = [
        ("F4 census counts", c1),
        ("spherical roots of F4", c2),
        ("Cartan pairing golden tables", c3),
        ("SL(4) quotients", c4),
        ("rank-2 F4 system", c5),
        ("rank-1 F4 system and its P-ancestors", c6),
        ("strong solvability", c7),
        ("spherical closure", c8),
        ("faithful couples", c9),
        ("parabolic gradings", c10),
        ("F4 fundamental weights", c11),
        ("property suites", c12),
    ];
    let mut results = BTreeMap::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f(&ctx);
        let tag = if r.is_ok() { "PASS" } else { "FAIL" };
        let detail = r.as_ref().unwrap_or_else(|e| e);
        println!(
            "criterion {:>2} {tag} {name}: {detail} ({:.2?})",
            i + 1,
            t.elapsed()
        );
        results.insert(i + 1, r.is_ok());
    }
    let failed: Vec<usize> = results
        .iter()
        .filter(|(_, ok)| !**ok)
        .map(|(i, _)| *i)
        .collect();
    println!(
        "acceptance: {} passed, {} failed",
        results.len() - failed.len(),
        failed.len()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
