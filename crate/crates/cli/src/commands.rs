use std::fmt::Write as _;
use std::sync::Arc;

use serde_json::{json, Value};
use slice_burnside::constants::{is_b_group, is_t_slice, m_circ, m_classical_in, m_slice};
use slice_burnside::corpus::prime_power;
use slice_burnside::group::{parse_group_spec, GroupRef};
use slice_burnside::ideals::{ideal_dimension, ClosureMoves, GroupUniverse, SliceFamily};
use slice_burnside::rational::{format_q, qi};
use slice_burnside::verify::{run_all, run_one, VerifyOptions};
use slice_burnside::{SliceRing, SubgroupLattice};

use crate::slices::{parse_generators, parse_slice, split_seed};
use crate::{Cli, Command, Failure, Format};

/// What a successful run prints, and whether it counts as a pass.
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn pass(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn group(cli: &Cli, spec: &str) -> Result<GroupRef, Failure> {
    Ok(Arc::new(parse_group_spec(spec, cli.order_cap)?))
}

fn family(name: &str) -> Result<SliceFamily, Failure> {
    Ok(name.parse::<SliceFamily>()?)
}

fn json_out(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Group { spec } => {
            let g = group(cli, spec)?;
            let ring = SliceRing::new(g.clone());
            let l = ring.lattice();
            let (order, subs, classes, slices) = (g.order(), l.len(), l.class_reps().len(), ring.len());
            Ok(Output::pass(match fmt {
                Format::Json => json_out(json!({
                    "group": g.label(), "order": order, "subgroups": subs,
                    "subgroup_classes": classes, "slice_classes": slices,
                })),
                Format::Csv => format!("group,order,subgroups,subgroup_classes,slice_classes\n\"{}\",{order},{subs},{classes},{slices}\n", g.label()),
                Format::Text => format!(
                    "group: {}\norder: {order}\nsubgroups: {subs}\nsubgroup classes: {classes}\nslice classes: {slices}\n",
                    g.label()
                ),
            }))
        }
        Command::Marks { spec } => {
            let ring = SliceRing::new(group(cli, spec)?);
            let m = ring.marks();
            Ok(Output::pass(match fmt {
                Format::Json => {
                    let rows: Vec<Vec<u64>> = (0..m.size()).map(|r| (0..m.size()).map(|c| m.get(r, c)).collect()).collect();
                    json_out(json!({ "labels": m.labels(), "marks": rows }))
                }
                _ => m.to_csv(),
            }))
        }
        Command::Idempotents { spec } => {
            let ring = SliceRing::new(group(cli, spec)?);
            Ok(Output::pass(match fmt {
                Format::Text => lines((0..ring.len()).map(|c| format!("{} = {}", ring.class_label(c), ring.idempotent(c)))),
                _ => {
                    let map = (0..ring.len())
                        .map(|c| (ring.class_label(c), ring.idempotent(c).to_json()))
                        .collect::<serde_json::Map<_, _>>();
                    json_out(Value::Object(map))
                }
            }))
        }
        Command::Mul { spec, a, b } => {
            let g = group(cli, spec)?;
            let ring = SliceRing::new(g.clone());
            let class = |text: &str| -> Result<usize, Failure> {
                let (t, s) = parse_slice(&g, text)?;
                Ok(ring.class_of_subgroups(&t, &s)?)
            };
            let x = ring.basis(class(a)?);
            let y = ring.basis(class(b)?);
            let p = &x * &y;
            Ok(Output::pass(match fmt {
                Format::Text => format!("{p}\n"),
                _ => json_out(p.to_json()),
            }))
        }
        Command::Mconst { spec, s, n } => {
            let g = group(cli, spec)?;
            let l = SubgroupLattice::new(g.clone());
            let si = l.index_of(&parse_generators(&g, s)?).expect("generated subgroup");
            let ni = l.index_of(&parse_generators(&g, n)?).expect("generated subgroup");
            let ctx = |e: slice_burnside::Error| Failure::Usage(format!("{} with S of order {} and N of order {}: {e}", g.label(), l.order_of(si), l.order_of(ni)));
            let m = m_slice(&l, si, ni).map_err(ctx)?;
            let mc = qi(m_circ(&l, si, ni).map_err(ctx)?);
            let classical = m_classical_in(&l, si, l.meet(si, ni)).map_err(ctx)?;
            let (m, mc, classical) = (format_q(&m), format_q(&mc), format_q(&classical));
            Ok(Output::pass(match fmt {
                Format::Json => json_out(json!({ "m": m, "m_circ": mc, "m_classical": classical })),
                Format::Csv => format!("m,m_circ,m_classical\n{m},{mc},{classical}\n"),
                Format::Text => format!("m = {m}\nm_circ = {mc}\nm_classical = {classical}\n"),
            }))
        }
        Command::Tslices { spec } => {
            let ring = SliceRing::new(group(cli, spec)?);
            let l = ring.lattice();
            let mut found = Vec::new();
            for c in 0..ring.len() {
                let k = ring.class(c);
                if is_t_slice(l, k.t, k.s)? {
                    found.push(ring.class_label(c));
                }
            }
            Ok(Output::pass(match fmt {
                Format::Json => json_out(json!(found)),
                _ => lines(found),
            }))
        }
        Command::Bgroups { max_order, prime } => {
            let p = *prime;
            let cube = p.checked_mul(p).and_then(|x| x.checked_mul(p));
            if prime_power(p) != Some((p, 1)) {
                return Err(Failure::Usage(format!("{p} is not prime")));
            }
            let bound = (*max_order).min(cube.unwrap_or(usize::MAX));
            if *max_order > bound {
                eprintln!("note: only orders up to {bound} = {p}^3 are enumerated");
            }
            let u = GroupUniverse::new(p, bound.max(1))?;
            let rows: Vec<(String, usize, bool)> = u
                .groups()
                .map(|g| (g.label().to_string(), g.order(), is_b_group(&SubgroupLattice::new(g.clone()))))
                .collect();
            Ok(Output::pass(match fmt {
                Format::Json => json_out(json!(rows
                    .iter()
                    .map(|(g, o, b)| json!({ "group": g, "order": o, "b_group": b }))
                    .collect::<Vec<_>>())),
                Format::Csv => "group,order,b_group\n".to_string() + &lines(rows.iter().map(|(g, o, b)| format!("\"{g}\",{o},{b}"))),
                Format::Text => lines(rows.iter().filter(|r| r.2).map(|r| r.0.clone())),
            }))
        }
        Command::IdealDim { spec, family: f } => {
            let f = family(f)?;
            let g = group(cli, spec)?;
            if prime_power(g.order()).is_none() && g.order() > 1 {
                eprintln!("warning: {} is not a p-group", g.label());
            }
            let d = ideal_dimension(&SliceRing::new(g), f);
            Ok(Output::pass(match fmt {
                Format::Json => json_out(json!({ "family": f.name(), "dimension": d })),
                _ => format!("{d}\n"),
            }))
        }
        Command::MinimalGroups { family: f, prime, bound } => {
            let f = family(f)?;
            let u = GroupUniverse::new(*prime, *bound)?;
            let mins: Vec<String> = u.minimal_groups(f).into_iter().map(|i| u.group(i).label().to_string()).collect();
            Ok(Output::pass(match fmt {
                Format::Json => json_out(json!({ "family": f.name(), "prime": prime, "bound": bound, "universe_bounded": true, "groups": mins })),
                _ => lines(mins),
            }))
        }
        Command::Closure { seed, prime, bound, no_frattini_products } => {
            let (spec, t, s) = split_seed(seed)?;
            let g = group(cli, spec)?;
            let (t, s) = (parse_generators(&g, t)?, parse_generators(&g, s)?);
            let u = GroupUniverse::new(*prime, *bound)?;
            let id = u.identify(&g, &t, &s)?;
            let moves = ClosureMoves { frattini_products: !no_frattini_products };
            let set = u.bounded_closure(id, moves);
            let matches: Vec<&str> = SliceFamily::IDEALS
                .iter()
                .filter(|&&f| u.family_trace(f) == set)
                .map(|f| f.name())
                .collect();
            let members: Vec<String> = set.iter().map(|&x| u.describe(x).to_string()).collect();
            Ok(Output::pass(match fmt {
                Format::Json => json_out(json!({
                    "seed": u.describe(id), "prime": prime, "bound": bound,
                    "universe_bounded": true, "lower_bound": true,
                    "members": set.iter().map(|&x| u.describe(x)).collect::<Vec<_>>(),
                    "matches": matches,
                })),
                _ => {
                    let mut out = String::new();
                    let _ = writeln!(out, "{} of {} abstract slices", set.len(), u.slices().len());
                    let _ = writeln!(out, "matches: {}", if matches.is_empty() { "none".into() } else { matches.join(", ") });
                    out + &lines(members)
                }
            }))
        }
        Command::CheckFamily { family: f, prime, bound } => {
            let f = family(f)?;
            let u = GroupUniverse::new(*prime, *bound)?;
            let r = u.check_conditions(f);
            let text = match fmt {
                Format::Json => json_out(serde_json::to_value(&r).expect("report serializes")),
                _ => {
                    let mut out = format!(
                        "{}: {} (universe p = {}, bound {}; {} groups, {} abstract slices, {} members)\n",
                        r.family,
                        if r.passed { "PASS" } else { "FAIL" },
                        r.prime,
                        r.bound,
                        r.groups,
                        r.abstract_slices,
                        r.members
                    );
                    let _ = writeln!(
                        out,
                        "violations: A {}, C {}, D {}, products {}",
                        r.condition_a.len(),
                        r.condition_c.len(),
                        r.condition_d.len(),
                        r.products.len()
                    );
                    if let Some((cond, w)) = r.first_witness() {
                        let _ = writeln!(out, "witness ({cond}): {} -> {}", w.slice, w.image);
                    }
                    out
                }
            };
            Ok(Output { text, ok: r.passed })
        }
        Command::Verify { deep, only } => {
            let opts = VerifyOptions { deep: *deep, ..VerifyOptions::default() };
            let reports = match only {
                Some(k) => vec![run_one(*k, &opts).ok_or_else(|| Failure::Usage(format!("no criterion {k}")))?],
                None => run_all(&opts),
            };
            let ok = reports.iter().all(|r| r.passed);
            let text = match fmt {
                Format::Json => json_out(serde_json::to_value(&reports).expect("reports serialize")),
                _ => {
                    let mut out = String::new();
                    for r in &reports {
                        let _ = writeln!(out, "{}", r.line());
                        for f in &r.failures {
                            let _ = writeln!(out, "    failure: {f}");
                        }
                        for n in &r.notes {
                            let _ = writeln!(out, "    note: {n}");
                        }
                    }
                    out
                }
            };
            Ok(Output { text, ok })
        }
    }
}
