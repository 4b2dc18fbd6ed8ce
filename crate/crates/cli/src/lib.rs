//! Command-line front end. [`run`] parses the arguments, performs one
//! command and returns the process exit code: 0 on success, 1 when the
//! input fails a check or an operation, 2 on a usage error. Every error
//! path prints a line `WITNESS: <json>` on standard output.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use cat_core::{find_isomorphism, to_dot, validate_category, Category, CategoryDoc, Verdict};
use clap::{Args, Parser, Subcommand, ValueEnum};
use flat::{
    flat_rep_from_action, flat_rep_from_representation, FlatCategoryRepresentation, FlatError, RightGroupalCategory,
};
use group_action::{is_foldable, is_semiregular, is_translative_within, ActionDoc, CategoryAction};
use musicgen::{generate, tet_rotation, FixtureSpec, GenError, ThirdPeriod};
use orbitfold::{build_representation, choose_transversal, orbit_category, Representation, Strategy};
use partialcat::{property_catalogue, sigma_classes, FlatRepresentation, ToneSystem};
use serde_json::{json, Value};

pub const DEFAULT_BUDGET: u64 = 1_000_000;
/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_VAR: &str = "ORBIFOLD_BUDGET";

#[derive(Parser)]
#[command(
    name = "orbifold",
    version,
    about = "Fold, unfold and flatten finite categories under group actions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated fixture.
    Gen(GenArgs),
    /// Orbit category and natural representation of an action.
    Fold(FoldArgs),
    /// Unfold a representation.
    Unfold(UnfoldArgs),
    /// Flat representation of a representation or of an action.
    Flatten(FlattenArgs),
    /// Run checks; exits 1 if any fails.
    Check(CheckArgs),
    /// Search for an isomorphism between two categories.
    Iso(IsoArgs),
    /// Render a document as DOT or canonical JSON.
    Export(ExportArgs),
    /// Run a small end-to-end pipeline.
    Demo(DemoArgs),
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FixtureName {
    FixK,
    ChainBundle,
    ZnCover,
    Product,
    ZnFold,
    Tet,
    Shepard,
    Diatonic,
    Tonnetz,
    LatticeWindow,
    GluedTetrachords,
}

#[derive(Args, Clone, Default)]
struct Params {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long)]
    dmax: Option<usize>,
    /// Period of the third coordinate of the chroma torus.
    #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
    third: Option<u8>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    fixture: FixtureName,
    #[command(flatten)]
    params: Params,
    /// Output file; actions go next to it as `<stem>.actions.json`.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ActionInput {
    /// Actions file as written by `gen`.
    #[arg(long)]
    actions: Option<PathBuf>,
    /// Which action of the file to use.
    #[arg(long, default_value_t = 0)]
    action_index: usize,
}

#[derive(Args)]
struct FoldArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[command(flatten)]
    action: ActionInput,
    /// Comma-separated transversal vertex names; least members otherwise.
    #[arg(long, value_delimiter = ',')]
    transversal: Option<Vec<String>>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct UnfoldArgs {
    #[arg(short, long)]
    input: PathBuf,
    /// Layer range `lo:hi` per free coordinate, for infinite groups.
    #[arg(long)]
    window: Vec<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FlattenArgs {
    /// A representation, or a category together with `--actions`.
    #[arg(short, long)]
    input: PathBuf,
    #[command(flatten)]
    action: ActionInput,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[command(flatten)]
    action: ActionInput,
    /// Category laws.
    #[arg(long)]
    category: bool,
    #[arg(long)]
    foldable: bool,
    #[arg(long)]
    semiregular: bool,
    #[arg(long)]
    translative: bool,
    /// Annotation laws of a representation.
    #[arg(long)]
    annotation: bool,
    /// Axioms of a flat representation.
    #[arg(long)]
    flat: bool,
    /// Property catalogue of a flat representation.
    #[arg(long)]
    catalogue: bool,
    /// Pitch-class rotation order used as symmetry group by `--catalogue`.
    #[arg(long)]
    rotation: Option<usize>,
    /// Sigma classes of a tone system.
    #[arg(long)]
    sigma: bool,
}

#[derive(Args)]
struct IsoArgs {
    #[arg(long)]
    left: PathBuf,
    #[arg(long)]
    right: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "dot")]
    format: Format,
    #[arg(long)]
    include_identities: bool,
    /// Export the orbit category of the action instead.
    #[arg(long, requires = "actions")]
    orbit: bool,
    #[command(flatten)]
    action: ActionInput,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoName {
    Roundtrip,
    Catalogue,
    Sigma,
    Lattice,
}

#[derive(Args)]
struct DemoArgs {
    #[arg(value_enum)]
    name: DemoName,
    #[arg(long, value_enum)]
    fixture: Option<FixtureName>,
    #[command(flatten)]
    params: Params,
}

/// Why a command stopped.
enum Failure {
    Usage(String),
    Domain {
        kind: String,
        detail: Value,
    },
    /// Witnesses were already printed.
    Reported,
}

fn domain(kind: &str, detail: impl Into<Value>) -> Failure {
    Failure::Domain {
        kind: kind.to_string(),
        detail: detail.into(),
    }
}

macro_rules! domain_from {
    ($($t:ty => $kind:literal),* $(,)?) => {
        $(impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                domain($kind, e.to_string())
            }
        })*
    };
}

domain_from! {
    cat_core::CatError => "category",
    group_action::ActionError => "action",
    orbitfold::FoldError => "fold",
    unfold::UnfoldError => "unfold",
    partialcat::PartialError => "partial",
    GenError => "generate",
}

impl From<FlatError> for Failure {
    fn from(e: FlatError) -> Self {
        match e {
            FlatError::AxiomViolation { law, witness } => domain(&law, json!(witness)),
            other => domain("flat", other.to_string()),
        }
    }
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    budget: u64,
}

impl Ctx<'_> {
    fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.out, "{}", s.as_ref());
    }

    fn witness(&mut self, kind: &str, detail: Value) {
        self.line(format!("WITNESS: {}", json!({"kind": kind, "detail": detail})));
    }

    fn emit(&mut self, output: Option<&Path>, text: &str) -> Result<(), Failure> {
        match output {
            Some(p) => {
                std::fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display())))?;
                self.line(format!("wrote {}", p.display()));
            }
            None => {
                let _ = self.out.write_all(text.as_bytes());
                if !text.ends_with('\n') {
                    self.line("");
                }
            }
        }
        Ok(())
    }
}

/// Pretty JSON with sorted keys, newline-terminated.
pub fn canonical_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Runs one command; the budget comes from [`BUDGET_VAR`] if set.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let budget = std::env::var(BUDGET_VAR).ok();
    run_with_budget(args, budget.as_deref(), out, err)
}

/// As [`run`] with the budget variable passed explicitly.
pub fn run_with_budget<I, T>(args: I, budget_var: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{e}");
            let _ = writeln!(
                out,
                "WITNESS: {}",
                json!({"kind": "usage", "detail": e.kind().to_string()})
            );
            return 2;
        }
    };
    let budget = match budget_var.map(str::parse::<u64>) {
        None => DEFAULT_BUDGET,
        Some(Ok(b)) if b > 0 => b,
        Some(_) => {
            let _ = writeln!(err, "error: {BUDGET_VAR} must be a positive integer");
            let _ = writeln!(out, "WITNESS: {}", json!({"kind": "usage", "detail": BUDGET_VAR}));
            return 2;
        }
    };
    let mut ctx = Ctx { out, budget };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(&mut ctx, a),
        Command::Fold(a) => cmd_fold(&mut ctx, a),
        Command::Unfold(a) => cmd_unfold(&mut ctx, a),
        Command::Flatten(a) => cmd_flatten(&mut ctx, a),
        Command::Check(a) => cmd_check(&mut ctx, a),
        Command::Iso(a) => cmd_iso(&mut ctx, a),
        Command::Export(a) => cmd_export(&mut ctx, a),
        Command::Demo(a) => cmd_demo(&mut ctx, a),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            ctx.witness("usage", json!(msg));
            2
        }
        Err(Failure::Domain { kind, detail }) => {
            let _ = writeln!(err, "error: {kind}: {detail}");
            ctx.witness(&kind, detail);
            1
        }
        Err(Failure::Reported) => 1,
    }
}

fn spec_of(f: FixtureName, p: &Params) -> FixtureSpec {
    let third = match p.third {
        Some(2) => ThirdPeriod::Two,
        _ => ThirdPeriod::Three,
    };
    match f {
        FixtureName::FixK => FixtureSpec::FixK,
        FixtureName::ChainBundle => FixtureSpec::ChainBundle {
            k: p.k.unwrap_or(3),
            h: p.h.unwrap_or(4),
        },
        FixtureName::ZnCover => FixtureSpec::ZnCover {
            n: p.n.unwrap_or(3),
            m: p.m.unwrap_or(5),
            dmax: p.dmax.unwrap_or(5),
        },
        FixtureName::Product => FixtureSpec::Product {
            k: p.k.unwrap_or(2),
            h: p.h.unwrap_or(2),
        },
        FixtureName::ZnFold => {
            let n = p.n.unwrap_or(12);
            FixtureSpec::ZnFold {
                n,
                dmax: p.dmax.unwrap_or(2 * n),
            }
        }
        FixtureName::Tet => FixtureSpec::Tet { n: p.n.unwrap_or(12) },
        FixtureName::Shepard => FixtureSpec::Shepard { n: p.n.unwrap_or(12) },
        FixtureName::Diatonic => FixtureSpec::Diatonic,
        FixtureName::Tonnetz => FixtureSpec::Tonnetz { third },
        FixtureName::LatticeWindow => FixtureSpec::LatticeWindow,
        FixtureName::GluedTetrachords => FixtureSpec::GluedTetrachords,
    }
}

/// `out.json` -> `out.actions.json`.
pub fn actions_path(output: &Path) -> PathBuf {
    let stem = output
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    output.with_file_name(format!("{stem}.actions.json"))
}

fn cmd_gen(ctx: &mut Ctx, a: GenArgs) -> Result<(), Failure> {
    let fixture = generate(&spec_of(a.fixture, &a.params))?;
    let actions = fixture.actions_json();
    if actions.is_some() && a.output.is_none() {
        return Err(Failure::Usage("this fixture has actions; pass --output".into()));
    }
    ctx.emit(a.output.as_deref(), &canonical_json(&fixture.to_json_value()))?;
    if let (Some(acts), Some(out)) = (actions, a.output.as_deref()) {
        ctx.emit(Some(&actions_path(out)), &canonical_json(&acts))?;
    }
    Ok(())
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| domain("json", format!("{}: {e}", path.display())))
}

/// Any document the commands accept.
enum Doc {
    Category(Category),
    Representation(Representation),
    FlatCategory(Box<FlatCategoryRepresentation>),
    Flat(Box<FlatRepresentation>),
    Tones(ToneSystem),
}

impl Doc {
    fn category(&self) -> Option<&Category> {
        match self {
            Doc::Category(c) => Some(c),
            Doc::Representation(r) => Some(&r.category),
            Doc::FlatCategory(f) => Some(&f.base),
            Doc::Flat(f) => Some(&f.completion.base),
            Doc::Tones(_) => None,
        }
    }
}

fn parse_doc(v: &Value) -> Result<Doc, Failure> {
    let has = |k: &str| v.get(k).is_some();
    Ok(if has("completion") {
        Doc::Flat(Box::new(FlatRepresentation::from_json_value(v)?))
    } else if has("base") {
        Doc::FlatCategory(Box::new(FlatCategoryRepresentation::from_json_value(v)?))
    } else if has("tones") {
        Doc::Tones(ToneSystem::from_json_value(v)?)
    } else if has("annotation") {
        Doc::Representation(Representation::from_json_value(v)?)
    } else if has("vertices") {
        let doc: CategoryDoc = serde_json::from_value(v.clone()).map_err(|e| domain("json", e.to_string()))?;
        Doc::Category(Category::from_doc(&doc)?)
    } else {
        return Err(domain("json", "unrecognised document"));
    })
}

fn load(path: &Path) -> Result<Doc, Failure> {
    parse_doc(&read_json(path)?)
}

fn load_category(path: &Path) -> Result<Category, Failure> {
    load(path)?
        .category()
        .cloned()
        .ok_or_else(|| Failure::Usage(format!("{} holds no category", path.display())))
}

fn load_action(category: &Category, a: &ActionInput) -> Result<CategoryAction, Failure> {
    let path = a
        .actions
        .as_deref()
        .ok_or_else(|| Failure::Usage("--actions is required".into()))?;
    let v = read_json(path)?;
    let docs: Vec<Value> = match v {
        Value::Array(list) => list,
        single => vec![single],
    };
    let doc = docs
        .get(a.action_index)
        .ok_or_else(|| Failure::Usage(format!("no action at index {}", a.action_index)))?;
    let doc: ActionDoc = serde_json::from_value(doc.clone()).map_err(|e| domain("json", e.to_string()))?;
    Ok(CategoryAction::from_doc(category.clone(), &doc)?)
}

fn fold_witness(act: &CategoryAction) -> Option<Value> {
    match is_foldable(act) {
        Verdict::Holds => None,
        Verdict::Fails(w) => Some(json!({
            "first": [w.first.0, w.first.1],
            "second": [w.second.0, w.second.1],
            "first_composite": w.first_composite,
            "second_composite": w.second_composite,
        })),
    }
}

fn cmd_fold(ctx: &mut Ctx, a: FoldArgs) -> Result<(), Failure> {
    let c = load_category(&a.input)?;
    let act = load_action(&c, &a.action)?;
    if let Some(w) = fold_witness(&act) {
        return Err(domain("foldable", w));
    }
    if let Verdict::Fails(w) = is_semiregular(&act) {
        let orbit = orbit_category(&act)?;
        ctx.line(format!(
            "note: {} fixes {}; writing the orbit category only",
            w.element, w.fixed
        ));
        let doc = serde_json::to_value(orbit.category.to_doc()).expect("category documents serialize");
        return ctx.emit(a.output.as_deref(), &canonical_json(&doc));
    }
    let strategy = match a.transversal {
        Some(names) => Strategy::Given(names),
        None => Strategy::First,
    };
    let t = choose_transversal(&act, &strategy)?;
    let (rep, _) = build_representation(&act, &t)?;
    ctx.emit(a.output.as_deref(), &canonical_json(&rep.to_json_value()))
}

fn parse_range(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Usage(format!("window `{s}` is not lo:hi"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let (lo, hi) = (
        lo.trim().parse().map_err(|_| bad())?,
        hi.trim().parse().map_err(|_| bad())?,
    );
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn cmd_unfold(ctx: &mut Ctx, a: UnfoldArgs) -> Result<(), Failure> {
    let Doc::Representation(rep) = load(&a.input)? else {
        return Err(Failure::Usage("unfold needs a representation".into()));
    };
    let u = if rep.group().is_finite() {
        unfold::unfold(&rep)?
    } else {
        if a.window.is_empty() {
            return Err(domain("unfold", "annotation group is infinite; pass --window lo:hi"));
        }
        let ranges = a.window.iter().map(|s| parse_range(s)).collect::<Result<Vec<_>, _>>()?;
        let layers = unfold::box_window(rep.group(), &ranges)?;
        unfold::bounded_unfold(&rep, &layers)?
    };
    let doc = serde_json::to_value(u.category.to_doc()).expect("category documents serialize");
    ctx.emit(a.output.as_deref(), &canonical_json(&doc))
}

fn cmd_flatten(ctx: &mut Ctx, a: FlattenArgs) -> Result<(), Failure> {
    let bundle = match load(&a.input)? {
        Doc::Representation(rep) => {
            let group_action::AnnotationGroup::Abelian { free_rank, torsion } = rep.group().clone() else {
                return Err(domain("flatten", "loop group must be free abelian"));
            };
            if free_rank == 0 || !torsion.is_empty() {
                return Err(domain("flatten", "loop group must be free abelian of positive rank"));
            }
            flat_rep_from_representation(&rep, RightGroupalCategory::orthant(free_rank), None)?
        }
        Doc::Category(c) => {
            let act = load_action(&c, &a.action)?;
            let t = choose_transversal(&act, &Strategy::First)?;
            flat_rep_from_action(&act, &t, t.chosen[0])?
        }
        _ => {
            return Err(Failure::Usage(
                "flatten needs a representation or a category with --actions".into(),
            ))
        }
    };
    ctx.emit(a.output.as_deref(), &canonical_json(&bundle.rep.to_json_value()))
}

fn cmd_check(ctx: &mut Ctx, a: CheckArgs) -> Result<(), Failure> {
    let doc = load(&a.input)?;
    let any =
        a.category || a.foldable || a.semiregular || a.translative || a.annotation || a.flat || a.catalogue || a.sigma;
    if !any {
        return Err(Failure::Usage("choose at least one check".into()));
    }
    let mut failed = false;
    let mut report = |ctx: &mut Ctx, name: &str, witness: Option<Value>| {
        ctx.line(format!("{name}: {}", witness.is_none()));
        if let Some(w) = witness {
            ctx.witness(name, w);
            failed = true;
        }
    };
    if a.category {
        let c = doc
            .category()
            .ok_or_else(|| Failure::Usage("no category in input".into()))?;
        let r = validate_category(c);
        let w = r
            .violations
            .first()
            .map(|v| json!({"law": v.law, "witness": v.witness}));
        report(ctx, "category", w);
    }
    if a.foldable || a.semiregular || a.translative {
        let c = doc
            .category()
            .ok_or_else(|| Failure::Usage("no category in input".into()))?;
        let act = load_action(c, &a.action)?;
        if a.foldable {
            report(ctx, "foldable", fold_witness(&act));
        }
        if a.semiregular {
            let w = is_semiregular(&act)
                .witness()
                .map(|w| json!({"element": w.element, "fixed": w.fixed}));
            report(ctx, "semiregular", w);
        }
        if a.translative {
            let w = match is_translative_within(&act, ctx.budget) {
                Ok(t) => t.failure.map(|(x, y)| json!([x, y])),
                Err(e) => Some(json!(e.to_string())),
            };
            report(ctx, "translative", w);
        }
    }
    if a.annotation {
        let Doc::Representation(rep) = &doc else {
            return Err(Failure::Usage("--annotation needs a representation".into()));
        };
        let w = rep
            .check()
            .violations
            .first()
            .map(|v| json!({"law": v.law, "witness": v.witness}));
        report(ctx, "annotation", w);
    }
    if a.flat {
        let f = match &doc {
            Doc::FlatCategory(f) => f.as_ref(),
            Doc::Flat(f) => &f.completion,
            _ => return Err(Failure::Usage("--flat needs a flat representation".into())),
        };
        let w = f
            .check()
            .violations
            .first()
            .map(|v| json!({"law": v.law, "witness": v.witness}));
        report(ctx, "flat", w);
    }
    if a.catalogue {
        let f = match &doc {
            Doc::Flat(f) => f.as_ref().clone(),
            Doc::FlatCategory(f) => FlatRepresentation::whole(f.as_ref().clone()),
            _ => return Err(Failure::Usage("--catalogue needs a flat representation".into())),
        };
        let s = match a.rotation {
            Some(n) => Some(tet_rotation(&f.completion.base, n)?),
            None => None,
        };
        let flags = property_catalogue(&f.annotated(), &f.part, s.as_ref(), ctx.budget);
        for (name, v) in flags.rows() {
            ctx.line(format!("{name}: {v}"));
        }
    }
    if a.sigma {
        let Doc::Tones(t) = &doc else {
            return Err(Failure::Usage("--sigma needs a tone system".into()));
        };
        let classes = sigma_classes(t)?;
        ctx.line(format!("sigma classes: {} of {} tones", classes.num_classes(), t.len()));
        for cls in classes.classes() {
            let names: Vec<&str> = cls.iter().map(|&i| t.tones[i].as_str()).collect();
            ctx.line(format!("  {{{}}}", names.join(", ")));
        }
    }
    if failed {
        Err(Failure::Reported)
    } else {
        Ok(())
    }
}

fn cmd_iso(ctx: &mut Ctx, a: IsoArgs) -> Result<(), Failure> {
    let (l, r) = (load_category(&a.left)?, load_category(&a.right)?);
    match find_isomorphism(&l, &r, ctx.budget) {
        Ok(Some(f)) => {
            ctx.line("isomorphic");
            let vmap: serde_json::Map<String, Value> = l
                .vertices()
                .map(|v| (l.vertex_name(v).to_string(), json!(r.vertex_name(f.vertex_map[v]))))
                .collect();
            ctx.line(json!({"vertices": vmap}).to_string());
            Ok(())
        }
        Ok(None) => Err(domain(
            "isomorphism",
            json!({"left": [l.num_vertices(), l.num_arrows()], "right": [r.num_vertices(), r.num_arrows()]}),
        )),
        Err(e) => Err(domain("budget", e.to_string())),
    }
}

fn cmd_export(ctx: &mut Ctx, a: ExportArgs) -> Result<(), Failure> {
    let v = read_json(&a.input)?;
    let doc = parse_doc(&v)?;
    let text = if a.orbit {
        let c = doc
            .category()
            .ok_or_else(|| Failure::Usage("no category in input".into()))?;
        let act = load_action(c, &a.action)?;
        if let Some(w) = fold_witness(&act) {
            return Err(domain("foldable", w));
        }
        let orbit = orbit_category(&act)?;
        match a.format {
            Format::Dot => to_dot(&orbit.category, a.include_identities),
            Format::Json => canonical_json(&serde_json::to_value(orbit.category.to_doc()).expect("serializes")),
        }
    } else {
        match a.format {
            Format::Dot => {
                let c = doc
                    .category()
                    .ok_or_else(|| Failure::Usage("no category in input".into()))?;
                to_dot(c, a.include_identities)
            }
            Format::Json => canonical_json(&reexport(&doc)),
        }
    };
    ctx.emit(a.output.as_deref(), &text)
}

fn reexport(doc: &Doc) -> Value {
    match doc {
        Doc::Category(c) => serde_json::to_value(c.to_doc()).expect("category documents serialize"),
        Doc::Representation(r) => r.to_json_value(),
        Doc::FlatCategory(f) => f.to_json_value(),
        Doc::Flat(f) => f.to_json_value(),
        Doc::Tones(t) => t.to_json_value(),
    }
}

fn cmd_demo(ctx: &mut Ctx, a: DemoArgs) -> Result<(), Failure> {
    match a.name {
        DemoName::Roundtrip => {
            let spec = spec_of(a.fixture.unwrap_or(FixtureName::ChainBundle), &a.params);
            let act = match generate(&spec)? {
                musicgen::Fixture::Action(act) => act,
                _ => return Err(Failure::Usage("roundtrip needs an action fixture".into())),
            };
            let t = choose_transversal(&act, &Strategy::First)?;
            let rt = unfold::verify_roundtrips(&act, &t, ctx.budget)?;
            let src = act.category();
            let u = &rt.unfolding.category;
            ctx.line(format!("unfold_ok: {}", rt.unfold_ok));
            if let Some(f) = &rt.unfold_witness {
                let pairs: Vec<String> = u
                    .vertices()
                    .map(|v| format!("{} -> {}", u.vertex_name(v), src.vertex_name(f.vertex_map[v])))
                    .collect();
                ctx.line(format!("unfold witness: {}", pairs.join(", ")));
            }
            ctx.line(format!("refold_ok: {}", rt.refold_ok));
            if let Some(f) = &rt.refold_witness {
                let orbit = orbit_category(&act)?;
                let refolded = orbit_category(&unfold::induced_action(&rt.unfolding)?)?;
                let pairs: Vec<String> = f
                    .vertex_map
                    .iter()
                    .enumerate()
                    .map(|(v, &w)| {
                        format!(
                            "{} -> {}",
                            refolded.category.vertex_name(v),
                            orbit.category.vertex_name(w)
                        )
                    })
                    .collect();
                ctx.line(format!("refold witness: {}", pairs.join(", ")));
            }
            if rt.unfold_ok && rt.refold_ok {
                Ok(())
            } else {
                Err(domain(
                    "roundtrip",
                    json!({"unfold_ok": rt.unfold_ok, "refold_ok": rt.refold_ok}),
                ))
            }
        }
        DemoName::Catalogue => {
            let n = a.params.n.unwrap_or(12);
            let f = match a.fixture {
                Some(FixtureName::Shepard) => musicgen::gen_shepard(n)?,
                None | Some(FixtureName::Tet) => musicgen::gen_tet(n)?,
                Some(_) => return Err(Failure::Usage("catalogue demo takes --fixture tet or shepard".into())),
            };
            let s = tet_rotation(&f.completion.base, n)?;
            let flags = property_catalogue(&f.annotated(), &f.part, Some(&s), ctx.budget);
            for (name, v) in flags.rows() {
                ctx.line(format!("{name}: {v}"));
            }
            Ok(())
        }
        DemoName::Sigma => {
            for (name, t) in musicgen::all_tone_systems()? {
                let classes = sigma_classes(&t)?;
                ctx.line(format!("{name}: {} tones, {} classes", t.len(), classes.num_classes()));
            }
            Ok(())
        }
        DemoName::Lattice => {
            let r = musicgen::gen_lattice_window()?;
            let k = &r.category;
            let whole = partialcat::PartialSubcategory::whole(k);
            ctx.line(format!("vertex classes: {}", k.num_vertices()));
            ctx.line(format!("category laws hold: {}", validate_category(k).is_valid()));
            match partialcat::relation_antisymmetry_witness(k, &whole) {
                Some((x, y)) => {
                    ctx.line(format!(
                        "factor relation not antisymmetric: {} <-> {}",
                        k.vertex_name(x),
                        k.vertex_name(y)
                    ));
                    Ok(())
                }
                None => Err(domain("lattice", "factor relation unexpectedly antisymmetric")),
            }
        }
    }
}
