//! One function per subcommand. Each returns a [`Report`] holding both the
//! rendered table text and the structured document, so the two output modes
//! always describe the same computation.

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Map, Value};

use blochcheck_core::cover::{
    self, bicanonical_character_dims, cover_invariants, validate_branch_data, BranchData,
};
use blochcheck_core::group_algebra::{
    enough_automorphisms_check, parse_group_file, two_sided_ideal_basis, z_of, FiniteGroup,
    SubgroupSpec,
};
use blochcheck_core::involution::{admissible_isolated_counts, inoue_bloch_verdict};
use blochcheck_core::linear_systems::{chi_riemann_roch, h0, interpolation_matrix, InterpolationProblem};
use blochcheck_core::picard::DivisorClass;
use blochcheck_core::quadrilateral::{configuration_report, parse_points_file, PointConfiguration};

use crate::files::parse_branch_file;
use crate::render;

/// The outcome of a subcommand in both output modes.
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub trace: Value,
    pub table: String,
}

impl Report {
    /// The machine document with its four fixed top-level keys. `Map` is
    /// ordered, so identical inputs render byte-identically.
    pub fn machine_doc(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("command".into(), json!(self.command));
        doc.insert("inputs".into(), self.inputs.clone());
        doc.insert("results".into(), self.results.clone());
        doc.insert("trace".into(), self.trace.clone());
        Value::Object(doc)
    }
}

fn load_points(path: Option<&std::path::Path>) -> Result<(PointConfiguration, Value)> {
    match path {
        None => Ok((PointConfiguration::standard(), points_json(&PointConfiguration::standard()))),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("reading points file {}", p.display()))?;
            let cfg = parse_points_file(&text).map_err(|e| anyhow!("{e}"))?;
            let echo = points_json(&cfg);
            Ok((cfg, echo))
        }
    }
}

fn load_branch(path: Option<&std::path::Path>) -> Result<(BranchData, Value)> {
    let branch = match path {
        None => cover::inoue_branch_data(),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("reading branch file {}", p.display()))?;
            parse_branch_file(&text)?
        }
    };
    let echo = json!({
        "D": branch.d.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "L": branch.l.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    });
    Ok((branch, echo))
}

fn points_json(cfg: &PointConfiguration) -> Value {
    json!(cfg.points().iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

pub fn intersections(points_file: Option<&std::path::Path>) -> Result<Report> {
    let (cfg, points_echo) = load_points(points_file)?;
    let report = configuration_report(&cfg);
    let violations = report.verify_relations();

    let headers: Vec<String> = std::iter::once(String::new())
        .chain(report.names.iter().cloned())
        .collect();
    let rows: Vec<Vec<String>> = report
        .names
        .iter()
        .zip(&report.matrix)
        .map(|(name, row)| {
            std::iter::once(name.clone())
                .chain(row.iter().map(i64::to_string))
                .collect()
        })
        .collect();
    let mut table = render::table(&headers, &rows);
    table.push('\n');
    if violations.is_empty() {
        table.push_str("all intersection relations verified\n");
    } else {
        for v in &violations {
            table.push_str(&format!("violated: {v}\n"));
        }
    }

    let matrix_json: Vec<Value> = report.matrix.iter().map(|row| json!(row)).collect();
    Ok(Report {
        command: "intersections",
        inputs: json!({ "points": points_echo }),
        results: json!({
            "names": report.names,
            "matrix": matrix_json,
            "relations_ok": violations.is_empty(),
        }),
        trace: json!(violations
            .iter()
            .map(|v| json!({ "ok": false, "step": v }))
            .collect::<Vec<_>>()),
        table,
    })
}

pub fn cohomology(class: &str, points_file: Option<&std::path::Path>) -> Result<Report> {
    let class = DivisorClass::parse(class).map_err(|e| anyhow!("--class: {e}"))?;
    let (cfg, points_echo) = load_points(points_file)?;
    let dim = h0(&class, &cfg);
    let chi = chi_riemann_roch(&class);

    let mut trace = Vec::new();
    if class.a >= 0 {
        let problem = InterpolationProblem::from_class(&class, &cfg);
        let matrix = interpolation_matrix(&problem);
        let rank = matrix.rank();
        trace.push(json!({
            "ok": true,
            "step": format!(
                "interpolation matrix is {}x{} of rank {rank}",
                matrix.rows(), matrix.cols()
            ),
        }));
    } else {
        trace.push(json!({
            "ok": true,
            "step": "negative degree: no sections",
        }));
    }

    let table = format!(
        "class        {class}\nh0           {dim}\nchi (R-R)    {chi}\n"
    );
    Ok(Report {
        command: "cohomology",
        inputs: json!({ "class": class.to_string(), "points": points_echo }),
        results: json!({ "h0": dim, "chi_riemann_roch": chi }),
        trace: json!(trace),
        table,
    })
}

pub fn cover_invariants_cmd(
    points_file: Option<&std::path::Path>,
    branch_file: Option<&std::path::Path>,
    n2: u32,
) -> Result<Report> {
    let (cfg, points_echo) = load_points(points_file)?;
    let (branch, branch_echo) = load_branch(branch_file)?;

    let validation = validate_branch_data(&branch);
    let mut trace = Vec::new();
    for r in &validation.relations {
        let (j, k) = ((r.index % 3) + 1, ((r.index + 1) % 3) + 1);
        trace.push(json!({
            "ok": r.ok,
            "step": format!(
                "cover relation D{j}+D{k} = 2L{}: {} vs {}",
                r.index, r.lhs.to_string(), r.rhs.to_string()
            ),
        }));
    }
    for n in &validation.nodal {
        trace.push(json!({
            "ok": n.ok,
            "step": format!("S{}.D{} = {}", n.side, n.branch, n.pairing),
        }));
    }
    if validation.degenerate {
        trace.push(json!({ "ok": true, "step": "degenerate: empty branch locus" }));
    }
    if !validation.all_pass() {
        bail!("branch data fails validation; run with --output machine for the full trace");
    }

    let inv = cover_invariants(&branch, &cfg, n2).map_err(|e| anyhow!("{e}"))?;
    let anti = cover::anti_invariant_dims(inv.bicanonical_dims);

    let rows = vec![
        vec!["chi(O) of the cover".to_string(), inv.chi_cover.to_string()],
        vec!["K^2 of the cover".to_string(), inv.k2_cover.to_string()],
        vec!["K^2 of the minimal model".to_string(), inv.k2_minimal.to_string()],
        vec!["p_g".to_string(), inv.p_g.to_string()],
        vec!["q".to_string(), inv.q.to_string()],
        vec![
            "bicanonical dims (inv, X1, X2, X3)".to_string(),
            format!("{:?}", inv.bicanonical_dims),
        ],
        vec![
            "anti-invariant dims (g1, g2, g3)".to_string(),
            format!("{:?}", anti),
        ],
    ];
    let mut table = render::table(&["invariant".to_string(), "value".to_string()], &rows);
    table.push('\n');
    table.push_str(&format!(
        "cover relations and nodal disjointness verified ({} checks)\n",
        validation.relations.len() + validation.nodal.len()
    ));

    Ok(Report {
        command: "cover-invariants",
        inputs: json!({ "branch": branch_echo, "n2": n2, "points": points_echo }),
        results: json!({
            "chi_cover": inv.chi_cover,
            "k2_cover": inv.k2_cover,
            "k2_minimal": inv.k2_minimal,
            "p_g": inv.p_g,
            "q": inv.q,
            "bicanonical_dims": inv.bicanonical_dims,
            "anti_invariant_dims": anti,
        }),
        trace: json!(trace),
        table,
    })
}

pub struct GroupCriterionArgs<'a> {
    pub group_file: Option<&'a std::path::Path>,
    /// Named subgroup playing the role of `H`; `None` means the trivial
    /// subgroup.
    pub subgroup_h: Option<&'a str>,
    /// Comma-separated named subgroups generating the ideal; `None` means
    /// every named subgroup in the file (or the three involutions of the
    /// default group).
    pub ideal: Option<&'a str>,
    /// Comma-separated true/false hypothesis flags, one per generator.
    pub flags: Option<&'a str>,
}

pub fn group_criterion(args: &GroupCriterionArgs<'_>) -> Result<Report> {
    let (group, named): (FiniteGroup, Vec<(String, SubgroupSpec)>) = match args.group_file {
        None => {
            let g = FiniteGroup::klein_four();
            let named = (1..=3)
                .map(|x| (format!("G{x}"), SubgroupSpec::generated_by(&g, x)))
                .collect();
            (g, named)
        }
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("reading group file {}", p.display()))?;
            let parsed = parse_group_file(&text).map_err(|e| anyhow!("{e}"))?;
            (parsed.group, parsed.subgroups)
        }
    };

    let find = |name: &str| -> Result<SubgroupSpec> {
        named
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s.clone())
            .ok_or_else(|| anyhow!("no subgroup named `{name}` in the group file"))
    };

    let h = match args.subgroup_h {
        None => SubgroupSpec::trivial(),
        Some(name) => find(name)?,
    };
    let (gen_names, gens): (Vec<String>, Vec<SubgroupSpec>) = match args.ideal {
        None => named.iter().cloned().unzip(),
        Some(list) => {
            let mut names = Vec::new();
            let mut specs = Vec::new();
            for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                names.push(name.to_string());
                specs.push(find(name)?);
            }
            (names, specs)
        }
    };
    if gens.is_empty() {
        bail!("the ideal needs at least one generating subgroup");
    }
    let flags: Vec<bool> = match args.flags {
        None => vec![true; gens.len()],
        Some(list) => list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| match s {
                "true" => Ok(true),
                "false" => Ok(false),
                other => bail!("--flags entries must be true or false, got `{other}`"),
            })
            .collect::<Result<_>>()?,
    };
    if flags.len() != gens.len() {
        bail!("--flags must list one value per ideal generator ({} needed)", gens.len());
    }

    let verdict = enough_automorphisms_check(&group, &h, &gens, &flags).map_err(|e| anyhow!("{e}"))?;
    let zs: Vec<_> = gens.iter().map(|s| z_of(s, &group)).collect::<Result<Vec<_>, _>>()?;
    let ideal_dim = two_sided_ideal_basis(&zs, &group).len();

    let mut trace = vec![json!({
        "ok": verdict.membership,
        "step": format!(
            "condition (1): z(H) in the two-sided ideal ({}); ideal dimension {ideal_dim} of {}",
            verdict.membership, group.order()
        ),
    })];
    for (name, &flag) in gen_names.iter().zip(&flags) {
        trace.push(json!({
            "ok": flag,
            "step": format!("condition (2) for {name}: quotient hypothesis {}", flag),
        }));
    }

    let rows = vec![
        vec!["group order".to_string(), group.order().to_string()],
        vec!["H".to_string(), format!("{:?}", h.members())],
        vec!["ideal generators".to_string(), gen_names.join(", ")],
        vec!["z(H) in ideal".to_string(), verdict.membership.to_string()],
        vec!["ideal dimension".to_string(), ideal_dim.to_string()],
        vec![
            "quotient flags".to_string(),
            flags.iter().map(bool::to_string).collect::<Vec<_>>().join(", "),
        ],
        vec!["criterion satisfied".to_string(), verdict.satisfied.to_string()],
    ];
    let table = render::table(&["field".to_string(), "value".to_string()], &rows);

    Ok(Report {
        command: "group-criterion",
        inputs: json!({
            "flags": flags,
            "generators": gen_names,
            "h": h.members(),
            "order": group.order(),
        }),
        results: json!({
            "criterion_satisfied": verdict.satisfied,
            "ideal_dimension": ideal_dim,
            "membership": verdict.membership,
        }),
        trace: json!(trace),
        table,
    })
}

pub fn involution_scan(k2: i64) -> Result<Report> {
    let scan = admissible_isolated_counts(k2).map_err(|e| anyhow!("{e}"))?;

    let headers = ["t", "m", "k", "rho(T)", "K2(T)", "rule", "admissible"]
        .map(String::from)
        .to_vec();
    let rows: Vec<Vec<String>> = scan
        .records
        .iter()
        .map(|r| {
            vec![
                r.t.to_string(),
                r.m.to_string(),
                r.k.to_string(),
                r.rho_t_hat.to_string(),
                r.k2_t_hat.to_string(),
                r.rule.label().to_string(),
                r.admissible.to_string(),
            ]
        })
        .collect();
    let mut table = render::table(&headers, &rows);
    table.push('\n');
    table.push_str(&format!(
        "admissible isolated fixed-point counts: {:?}\n",
        scan.admissible.iter().collect::<Vec<_>>()
    ));

    let records: Vec<Value> = scan
        .records
        .iter()
        .map(|r| {
            json!({
                "admissible": r.admissible,
                "k": r.k,
                "k2_t_hat": r.k2_t_hat,
                "m": r.m,
                "note": r.note,
                "rho_t_hat": r.rho_t_hat,
                "rule": r.rule.label(),
                "t": r.t,
            })
        })
        .collect();
    Ok(Report {
        command: "involution-scan",
        inputs: json!({ "k2": k2 }),
        results: json!({
            "admissible": scan.admissible.iter().collect::<Vec<_>>(),
            "rho_s": scan.rho_s,
        }),
        trace: json!(records),
        table,
    })
}

pub fn bloch_verdict(
    points_file: Option<&std::path::Path>,
    branch_file: Option<&std::path::Path>,
) -> Result<Report> {
    let (cfg, points_echo) = load_points(points_file)?;
    let (branch, branch_echo) = load_branch(branch_file)?;

    let validation = validate_branch_data(&branch);
    if !validation.all_pass() {
        bail!("branch data fails the cover relations; cannot assemble a verdict");
    }
    let dims = bicanonical_character_dims(&branch, &cfg);
    let anti = cover::anti_invariant_dims(dims);
    let verdict = inoue_bloch_verdict(anti.map(|d| d as i64));

    let mut trace = vec![json!({
        "ok": true,
        "step": format!(
            "bicanonical character dimensions {:?} give anti-invariant dimensions {:?}",
            dims, anti
        ),
    })];
    for s in &verdict.steps {
        trace.push(json!({ "ok": s.ok, "step": format!("{}: {}", s.label, s.detail) }));
    }

    let mut table = String::new();
    table.push_str(&format!("bicanonical dims      {dims:?}\n"));
    table.push_str(&format!("anti-invariant dims   {anti:?}\n"));
    table.push_str(&format!(
        "fixed-point counts    {}\n",
        verdict
            .k_values
            .iter()
            .map(|k| k.map_or("infeasible".to_string(), |k| k.to_string()))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    table.push_str(&format!(
        "admissible counts     {:?}\n\n",
        verdict.admissible.iter().collect::<Vec<_>>()
    ));
    for s in &verdict.steps {
        table.push_str(&format!(
            "[{}] {}: {}\n",
            if s.ok { "ok" } else { "!!" },
            s.label,
            s.detail
        ));
    }
    table.push('\n');
    table.push_str(&format!(
        "verdict: {}\n",
        if verdict.established { "established" } else { "not established" }
    ));

    Ok(Report {
        command: "bloch-verdict",
        inputs: json!({ "branch": branch_echo, "points": points_echo }),
        results: json!({
            "admissible": verdict.admissible.iter().collect::<Vec<_>>(),
            "anti_invariant_dims": anti,
            "bicanonical_dims": dims,
            "established": verdict.established,
            "k_values": verdict.k_values,
            "verdict": if verdict.established { "established" } else { "not established" },
        }),
        trace: json!(trace),
        table,
    })
}
