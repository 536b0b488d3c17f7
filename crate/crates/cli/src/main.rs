use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use equichar::duality::{self, bredon_duality_obstruction, cohen_macaulay, double_along, jensen_meier_profile, raag_duality};
use equichar::euler::{acyclicity_condition, chi_fixed_table, euler_class_cyclic, euler_class_raag, free_coefficient, vanishing_identity};
use equichar::exactlin::HomologyGroup;
use equichar::format::{parse_action, parse_complex_file, parse_group_file, ComplexFile, GroupSpec};
use equichar::jones::jones_report;
use equichar::permgrp::FiniteGroup;
use equichar::posets::{elementary_abelian_euler_formula, quillen_thevenaz_check, subgroup_poset, weyl_poset_check, SubgroupFilter};
use equichar::simp::{are_isomorphic, find_full_subcomplex_isomorphic, GroupAction, SimplicialComplex};
use equichar::{Error, Rational, Result};

const SCHEMA: &str = "equichar/1";

#[derive(Parser)]
#[command(name = "equichar", version, about = "Equivariant Euler classes, Cohen-Macaulay and duality checks for right-angled Artin groups with finite group actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Emit one JSON document on stdout.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Equivariant Euler class of K ⋉ A_L.
    EulerClass {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        group: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Coefficient of [Γ/1]; without a complex, the vanishing identity of K.
    EulerFreeCoeff {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        complex: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Whether every vertex is fixed by a nontrivial proper subgroup.
    AcyclicityCheck {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        group: PathBuf,
        /// Accept any p-group, not only C_p × C_p.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Cohen–Macaulay check over every link.
    CmCheck {
        #[arg(long)]
        complex: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Duality of A_L and its cohomology profile; with a group, the
    /// per-class Bredon duality obstruction scan.
    DualityReport {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        group: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Finds the pattern as a full subcomplex and doubles the complex along it.
    Double {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Compares |N₁(G)| and |A₁(G)|.
    QuillenCheck {
        #[arg(long)]
        group: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Compares {K : H < K ≤ G} with F₁(N_G(H)/H) for every H.
    WeylCheck {
        #[arg(long)]
        group: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Augmented Euler characteristic of the nontrivial proper subgroups,
    /// of (C_p)^n or of a given group.
    PosetEuler {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        group: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Conjugacy classes of subgroups.
    Subgroups {
        #[arg(long)]
        group: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Builds and checks the free C_p extension of a Moore complex.
    JonesVerify {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        common: Common,
    },
}

struct Outcome {
    command: &'static str,
    json: BTreeMap<&'static str, Value>,
    text: String,
    ok: bool,
}

impl Outcome {
    fn new(command: &'static str) -> Self {
        Outcome { command, json: BTreeMap::new(), text: String::new(), ok: true }
    }

    fn set(&mut self, key: &'static str, value: impl serde::Serialize) {
        self.json.insert(key, serde_json::to_value(value).expect("serializable"));
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load_complex(path: &Path) -> Result<(String, SimplicialComplex)> {
    parse_complex_file(&read(path)?).map_err(|e| annotate(e, path))
}

fn load_group(path: &Path) -> Result<GroupSpec> {
    parse_group_file(&read(path)?, None).map_err(|e| annotate(e, path))
}

fn load_action(complex: &Path, group: &Path) -> Result<(SimplicialComplex, GroupSpec, GroupAction)> {
    let (_, x) = load_complex(complex)?;
    let (spec, action) = parse_action(x.clone(), &read(group)?).map_err(|e| annotate(e, group))?;
    Ok((x, spec, action))
}

fn annotate(e: Error, path: &Path) -> Error {
    match e {
        Error::Input(m) => Error::Input(format!("{}: {m}", path.display())),
        other => other,
    }
}

fn homology_text(h: &BTreeMap<i64, HomologyGroup>) -> String {
    let parts: Vec<String> = h.iter().filter(|(_, g)| !g.is_trivial()).map(|(d, g)| format!("H~{d} = {g}")).collect();
    if parts.is_empty() {
        "trivial".into()
    } else {
        parts.join(", ")
    }
}

fn simplex_text(s: &[String]) -> String {
    if s.is_empty() {
        "∅".into()
    } else {
        format!("{{{}}}", s.join(","))
    }
}

fn euler_class_cmd(complex: &Path, group: &Path) -> Result<Outcome> {
    let (_, spec, action) = load_action(complex, group)?;
    let mut out = Outcome::new("euler-class");
    let class = euler_class_raag(&action)?;
    let k = action.group();
    out.line(format!("K = {} of order {}", spec.name, k.order()));
    out.line(format!("Euler class: {class}"));
    for t in &class.terms {
        out.line(format!("  [Γ/{}] (order {}): {}", t.label, t.order, t.coefficient));
    }
    if k.is_cyclic(&k.whole()) {
        let cyclic = euler_class_cyclic(&action)?;
        let agree = cyclic == class;
        out.line(format!("cyclic formula: {cyclic} ({})", if agree { "agrees" } else { "DISAGREES" }));
        out.set("cyclic_agrees", agree);
        out.set("cyclic", &cyclic);
        out.ok = agree;
    }
    out.set("formal_sum", class.to_string());
    out.set("class", &class);
    Ok(out)
}

fn euler_free_coeff_cmd(group: &Path, complex: Option<&Path>) -> Result<Outcome> {
    let mut out = Outcome::new("euler-free-coeff");
    match complex {
        None => {
            let spec = load_group(group)?;
            let v = vanishing_identity(&spec.group)?;
            out.line(format!("vanishing identity for {} (order {}): {v}", spec.name, spec.group.order()));
            out.set("vanishing_identity", v);
            out.ok = v.is_zero();
        }
        Some(c) => {
            let (_, _, action) = load_action(c, group)?;
            let table = chi_fixed_table(&action)?;
            let k = action.group();
            let coeff = free_coefficient(k, |h| {
                let v = table.get(h).ok_or_else(|| Error::Internal("class missing from table".into()))?;
                Ok(Rational::from(1 - v))
            })?;
            for e in &table.entries {
                out.line(format!("  χ(L^H) = {:>3}  for H = {}", e.value, e.label));
            }
            out.line(format!("coefficient of [Γ/1]: {coeff}"));
            out.set("chi_fixed", &table);
            out.set("coefficient", coeff);
        }
    }
    Ok(out)
}

fn acyclicity_cmd(complex: &Path, group: &Path, force: bool) -> Result<Outcome> {
    let (_, _, action) = load_action(complex, group)?;
    let r = acyclicity_condition(&action, force)?;
    let mut out = Outcome::new("acyclicity-check");
    if r.holds {
        out.line(format!("condition holds ({})", r.scope));
    } else {
        out.line(format!("fails; uncovered: {} ({})", r.uncovered_vertices.join(","), r.scope));
    }
    out.ok = r.holds;
    out.set("report", &r);
    Ok(out)
}

fn cm_text(out: &mut Outcome, r: &duality::CMReport) {
    if r.is_cm {
        out.line(format!("Cohen-Macaulay of dimension {}", r.dimension));
    } else {
        out.line(format!("not Cohen-Macaulay (dimension {})", r.dimension));
        for f in &r.failures {
            out.line(format!("  failure at {}: H~{}(link) = {}", simplex_text(&f.simplex), f.degree, f.group));
        }
    }
}

fn cm_cmd(complex: &Path) -> Result<Outcome> {
    let (_, x) = load_complex(complex)?;
    let r = cohen_macaulay(&x)?;
    let mut out = Outcome::new("cm-check");
    cm_text(&mut out, &r);
    out.ok = r.is_cm;
    out.set("report", &r);
    Ok(out)
}

fn duality_cmd(complex: &Path, group: Option<&Path>) -> Result<Outcome> {
    let mut out = Outcome::new("duality-report");
    match group {
        None => {
            let (_, x) = load_complex(complex)?;
            let d = raag_duality(&x)?;
            out.line(format!("A_L is {}a duality group", if d.is_duality { "" } else { "not " }));
            cm_text(&mut out, &d.report);
            let profile = jensen_meier_profile(&x, x.dimension() + 2)?;
            for (k, entries) in &profile.degrees {
                let parts: Vec<String> = entries
                    .iter()
                    .map(|e| {
                        let mult = match e.multiplicity {
                            duality::Multiplicity::One => "",
                            duality::Multiplicity::Infinite => "⊕∞ ",
                        };
                        format!("{mult}H~^{}(Lk {}) = {}", e.link_degree, simplex_text(&e.simplex), e.group)
                    })
                    .collect();
                out.line(format!("  H^{k}(A_L, ZA_L): {}", if parts.is_empty() { "0".to_string() } else { parts.join(" ⊕ ") }));
            }
            out.set("duality", &d);
            out.set("profile", &profile);
        }
        Some(g) => {
            let (_, _, action) = load_action(complex, g)?;
            let r = bredon_duality_obstruction(&action)?;
            for c in &r.classes {
                out.line(format!(
                    "  H = {} (order {}): L^H has f-vector {:?}, {}",
                    c.label,
                    c.order,
                    c.fixed_f_vector,
                    if c.duality { "Cohen-Macaulay" } else { "not Cohen-Macaulay" }
                ));
            }
            out.line(&r.verdict);
            out.set("obstruction", &r);
        }
    }
    Ok(out)
}

fn double_cmd(complex: &Path, pattern: &Path) -> Result<Outcome> {
    let (host_name, host) = load_complex(complex)?;
    let (pattern_name, pat) = load_complex(pattern)?;
    let mut out = Outcome::new("double");
    let Some(embedding) = find_full_subcomplex_isomorphic(&host, &pat) else {
        out.line(format!("{pattern_name} is not a full subcomplex of {host_name}"));
        out.ok = false;
        out.set("embedding", Value::Null);
        return Ok(out);
    };
    let a = host.full_subcomplex(&embedding.image())?;
    let (l, swap) = double_along(&host, &a)?;
    let fixed = swap.fixed_subcomplex(&swap.group().whole())?;
    let l_cm = cohen_macaulay(&l)?.is_cm;
    let fixed_iso = are_isomorphic(&fixed, &pat);
    let fixed_cm = if fixed.is_empty() { true } else { cohen_macaulay(&fixed)?.is_cm };
    let swap_text = swap.group().generators().first().map(|g| g.to_cycle_string(swap.group().points())).unwrap_or_else(|| "()".into());
    let degrees: BTreeMap<String, usize> = embedding
        .map
        .iter()
        .map(|(p, h)| (p.clone(), host.degree(host.vertex_index(h).expect("host vertex"))))
        .collect();
    for (p, h) in &embedding.map {
        out.line(format!("  {p} ↦ {h} (degree {})", degrees[p]));
    }
    out.line(format!("doubled complex: f-vector {:?}, flag: {}, Cohen-Macaulay: {l_cm}", l.f_vector(), l.is_flag()));
    out.line(format!("fixed subcomplex of the swap ≅ {pattern_name}: {fixed_iso}, Cohen-Macaulay: {fixed_cm}"));
    out.line(format!("swap: {swap_text}"));
    out.set("embedding", &embedding);
    out.set("host_degrees", &degrees);
    out.set("doubled", ComplexFile::from_complex(&format!("{host_name} doubled along {pattern_name}"), &l));
    out.set("doubled_f_vector", l.f_vector());
    out.set("doubled_is_flag", l.is_flag());
    out.set("doubled_is_cm", l_cm);
    out.set("fixed_isomorphic_to_pattern", fixed_iso);
    out.set("fixed_is_cm", fixed_cm);
    out.set("swap", swap_text);
    Ok(out)
}

fn quillen_cmd(group: &Path) -> Result<Outcome> {
    let spec = load_group(group)?;
    let r = quillen_thevenaz_check(&spec.group);
    let mut out = Outcome::new("quillen-check");
    out.line(format!("|N₁| ({} subgroups): {}", r.nilpotent_count, homology_text(&r.nilpotent_homology)));
    out.line(format!("|A₁| ({} subgroups): {}", r.elementary_abelian_count, homology_text(&r.elementary_abelian_homology)));
    out.line(if r.equal { "equal" } else { "DIFFERENT" });
    out.ok = r.equal;
    out.set("report", &r);
    Ok(out)
}

fn weyl_cmd(group: &Path) -> Result<Outcome> {
    let spec = load_group(group)?;
    let g = &spec.group;
    let mut out = Outcome::new("weyl-check");
    let mut rows = Vec::new();
    for h in g.all_subgroups() {
        let r = weyl_poset_check(g, &h)?;
        let label = g.subgroup_to_string(&h);
        out.line(format!("  H = {label}: {} vs {} ({})", homology_text(&r.overgroups_homology), homology_text(&r.weyl_homology), if r.equal { "equal" } else { "DIFFERENT" }));
        out.ok &= r.equal;
        rows.push(json!({ "subgroup": label, "report": r }));
    }
    out.line(if out.ok { "all equal" } else { "mismatch found" });
    out.set("subgroups", rows);
    Ok(out)
}

fn elementary_abelian_group(p: u64, n: u32) -> Result<FiniteGroup> {
    let p = p as usize;
    let n = n as usize;
    let points: Vec<String> = (1..=n * p).map(|i| i.to_string()).collect();
    let gens = (0..n)
        .map(|i| equichar::permgrp::Permutation::from_cycles(n * p, &[(i * p..(i + 1) * p).collect()]))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_generators(points, gens)
}

fn poset_euler_cmd(p: Option<u64>, n: Option<u32>, group: Option<&Path>) -> Result<Outcome> {
    let mut out = Outcome::new("poset-euler");
    let (g, formula) = match (group, p, n) {
        (Some(path), _, _) => (load_group(path)?.group, None),
        (None, Some(p), Some(n)) => {
            let f = elementary_abelian_euler_formula(p, n)?;
            (elementary_abelian_group(p, n)?, Some(f))
        }
        _ => return Err(Error::Input("give --group, or both --p and --n".into())),
    };
    let s = subgroup_poset(&g, &SubgroupFilter::ProperNontrivialOf(g.whole()));
    let e = s.poset.augmented_euler();
    out.line(format!("nontrivial proper subgroups: {}, chains by length: {:?}", s.poset.len(), s.poset.chain_counts()));
    out.line(format!("augmented Euler characteristic: {e}"));
    out.set("elements", s.poset.len());
    out.set("chain_counts", s.poset.chain_counts());
    out.set("augmented_euler", e);
    if let Some(f) = formula {
        out.line(format!("closed form (-1)^n p^(n choose 2): {f} ({})", if f == e { "equal" } else { "DIFFERENT" }));
        out.set("formula", f);
        out.ok = f == e;
    }
    Ok(out)
}

fn subgroups_cmd(group: &Path) -> Result<Outcome> {
    let spec = load_group(group)?;
    let g = &spec.group;
    let mut out = Outcome::new("subgroups");
    let classes = g.conjugacy_classes_of_subgroups();
    out.line(format!("{} of order {}: {} subgroups in {} classes", spec.name, g.order(), classes.iter().map(|c| c.members.len()).sum::<usize>(), classes.len()));
    let mut rows = Vec::new();
    for c in &classes {
        let h = &c.representative;
        let normalizer = g.normalizer(h)?.order();
        let mut props = Vec::new();
        if g.is_cyclic(h) {
            props.push("cyclic");
        }
        if g.is_abelian(h) {
            props.push("abelian");
        }
        if g.is_nilpotent(h) {
            props.push("nilpotent");
        }
        if g.p_group_prime(h).is_some_and(|p| g.is_elementary_abelian(h, p)) {
            props.push("elementary abelian");
        }
        out.line(format!("  order {:>4}  class size {:>3}  |N| = {:>4}  {}  {}", h.order(), c.members.len(), normalizer, g.subgroup_to_string(h), props.join(", ")));
        rows.push(json!({
            "representative": g.subgroup_to_string(h),
            "generators": g.generators_of(h).into_iter().map(|x| g.element_to_string(x)).collect::<Vec<_>>(),
            "order": h.order(),
            "class_size": c.members.len(),
            "normalizer_order": normalizer,
            "properties": props,
        }));
    }
    out.set("order", g.order());
    out.set("classes", rows);
    Ok(out)
}

fn jones_cmd(m: usize, q: i64, p: usize) -> Result<Outcome> {
    let r = jones_report(m, q, p)?;
    let mut out = Outcome::new("jones-verify");
    out.line(format!("extension of M(Z/{q}, {m}) by free C_{p} cells: {}", if r.acyclic { "acyclic" } else { "NOT acyclic" }));
    if !r.acyclic {
        out.line(format!("  homology: {:?}", r.total_homology));
    }
    out.line(format!("fixed part is the Moore complex: {}", r.fixed_is_moore));
    let fixed: Vec<String> = r.fixed_homology.iter().filter(|(_, g)| !g.is_trivial()).map(|(d, g)| format!("H{d} = {g}")).collect();
    out.line(format!("fixed part homology: {}", fixed.join(", ")));
    for (prime, dim) in &r.fixed_mod_homology {
        out.line(format!("fixed part H{m}(-; F{prime}) has dimension {dim}"));
    }
    out.line(if r.verified { "verified" } else { "verification FAILED" });
    out.ok = r.verified;
    out.set("report", &r);
    Ok(out)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) => 2,
        Error::Precondition(_) | Error::Resource(_) | Error::Overflow(_) => 3,
        Error::ConstructionFailed(_) | Error::Internal(_) => 1,
    }
}

fn run(cli: Cli) -> (bool, Result<Outcome>) {
    match cli.command {
        Command::EulerClass { complex, group, common } => (common.json, euler_class_cmd(&complex, &group)),
        Command::EulerFreeCoeff { group, complex, common } => (common.json, euler_free_coeff_cmd(&group, complex.as_deref())),
        Command::AcyclicityCheck { complex, group, force, common } => (common.json, acyclicity_cmd(&complex, &group, force)),
        Command::CmCheck { complex, common } => (common.json, cm_cmd(&complex)),
        Command::DualityReport { complex, group, common } => (common.json, duality_cmd(&complex, group.as_deref())),
        Command::Double { complex, pattern, common } => (common.json, double_cmd(&complex, &pattern)),
        Command::QuillenCheck { group, common } => (common.json, quillen_cmd(&group)),
        Command::WeylCheck { group, common } => (common.json, weyl_cmd(&group)),
        Command::PosetEuler { p, n, group, common } => (common.json, poset_euler_cmd(p, n, group.as_deref())),
        Command::Subgroups { group, common } => (common.json, subgroups_cmd(&group)),
        Command::JonesVerify { m, q, p, common } => (common.json, jones_cmd(m, q, p)),
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush());
}

fn main() -> ExitCode {
    let (json_mode, result) = run(Cli::parse());
    match result {
        Ok(out) => {
            if json_mode {
                let mut doc = serde_json::Map::new();
                doc.insert("schema".into(), SCHEMA.into());
                doc.insert("command".into(), out.command.into());
                doc.insert("ok".into(), out.ok.into());
                for (k, v) in out.json {
                    doc.insert(k.into(), v);
                }
                emit(&format!("{}\n", serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable")));
            } else {
                emit(&out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
