//! `hopfjoin` command line. Inputs are file paths or `@name` catalog entries.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use super::catalog::{Catalog, LoadedCatalog, Loader};
use super::format::{self, DocKind};
use super::report::{OutputFormat, TheoremReport};
use super::{selftest, theorem2_report, HarnessError};
use crate::bialg::{section4_identity_check, tensor_bialgebra, Axiom, BialgMorphism, MorphismLaw};
use crate::catlim::{
    categorical_kernel, default_stable_family, is_stably_strong, is_strong_split_extension, pullback_coc,
};
use crate::exactla::Field;
use crate::finmon::{enumerate_homs, ENUMERATION_GUARD};
use crate::hopfadj::{antipode, grouplikes, monoid_algebra, monoid_algebra_map_between};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILURE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hopfjoin", version, about = "Exact checks for monoids, bialgebras and their split extensions")]
struct Cli {
    /// Base field for monoid inputs: `Q` or `F_p:<p>`.
    #[arg(long, global = true, default_value = "Q")]
    field: String,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Catalog directory replacing the bundled one.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a monoid, bialgebra, morphism or extension document.
    Check { input: String },
    /// Base-field-rational grouplike elements and their monoid.
    Grouplikes { input: String },
    /// Solve for an antipode.
    Antipode { input: String },
    /// Print the monoid algebra of a monoid document as a bialgebra document.
    Monalg { input: String },
    /// Categorical kernel of a morphism.
    Kernel { input: String },
    /// Pullback of `g : W → Y` and `f : X → Y`.
    Pullback { g: String, f: String },
    /// Strongness of a split extension.
    Strong { input: String },
    /// Strongness of the pullbacks of a split extension along the default family.
    Stablystrong {
        input: String,
        /// Monoids feeding the family (default: every catalog monoid).
        #[arg(long = "monoid")]
        monoids: Vec<String>,
    },
    /// Antipode, grouplike and strongness verdicts side by side.
    Theorem2 {
        input: String,
        /// Monoid expected to be the grouplike monoid.
        #[arg(long)]
        monoid: Option<String>,
    },
    /// Compare a morphism into a tensor product with the pairing of its projections.
    ///
    /// With a monoid input, every hom into the product of the two monoids is checked.
    Section4 { input: String, left: String, right: String },
    /// Run the full acceptance suite on the catalog.
    Selftest,
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(Output { text, failed }) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text)
                    .map_err(|e| HarnessError::Io { path: path.display().to_string(), message: e.to_string() }),
                None => stdout
                    .write_all(text.as_bytes())
                    .map_err(|e| HarnessError::Io { path: "stdout".into(), message: e.to_string() }),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_INPUT_ERROR;
            }
            if failed {
                EXIT_CLAIM_FAILURE
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn report(r: TheoremReport, format: OutputFormat) -> Self {
        Output { failed: r.failed(), text: r.render(format) }
    }
}

fn loader(cli: &Cli) -> Result<Loader, HarnessError> {
    let field: Field = cli.field.parse()?;
    let catalog = match &cli.catalog {
        Some(dir) => Catalog::from_dir(dir)?,
        None => Catalog::embedded(),
    };
    Ok(Loader::new(catalog, field))
}

fn execute(cli: &Cli) -> Result<Output, HarnessError> {
    let loader = loader(cli)?;
    let fmt = cli.format;
    let report = match &cli.command {
        Command::Check { input } => check(&loader, input)?,
        Command::Grouplikes { input } => {
            let b = loader.bialgebra(input, None)?;
            let gl = grouplikes(&b)?;
            let mut r = TheoremReport::new(input.clone());
            for (i, g) in gl.elements().iter().enumerate() {
                r.observe(format!("grouplike.{}", gl.label(i)), true, b.describe(g));
            }
            let m = gl.monoid();
            for a in 0..m.order() {
                let row: Vec<&str> = (0..m.order()).map(|c| m.label(m.mul(a, c))).collect();
                r.observe(format!("table.{}", m.label(a)), true, row.join(" "));
            }
            r.observe("monoid.is-group", m.is_group(), format!("{} elements", m.order()));
            r
        }
        Command::Antipode { input } => {
            let b = loader.bialgebra(input, None)?;
            let s = antipode(&b)?;
            let mut r = TheoremReport::new(input.clone());
            match &s.antipode {
                Some(matrix) => {
                    r.observe("antipode.exists", true, "antipode found and verified");
                    for c in 0..b.dim() {
                        r.observe(format!("antipode.{}", b.label(c)), true, b.describe(&matrix.column(c)));
                    }
                }
                None => {
                    let at = s.witness.map(|i| b.label(i).to_string()).unwrap_or_default();
                    r.observe("antipode.exists", false, format!("none; equations at {at} are inconsistent"));
                }
            }
            r
        }
        Command::Monalg { input } => {
            let m = loader.monoid(input, None)?;
            return Ok(Output {
                text: format::serialize_bialgebra(&monoid_algebra(&m, loader.field())),
                failed: false,
            });
        }
        Command::Kernel { input } => {
            let f = loader.morphism(input, None)?;
            let k = categorical_kernel(&f)?;
            let mut r = TheoremReport::new(input.clone());
            let naive =
                f.matrix().sub(BialgMorphism::zero(f.source().clone(), f.target().clone()).matrix())?.nullspace().len();
            r.observe("kernel.dim", true, format!("{} (linear preimage of the unit has dim {naive})", k.dim()));
            r.observe("kernel.basis", true, k.object.labels().join(", "));
            r
        }
        Command::Pullback { g, f } => {
            let g = loader.morphism(g, None)?;
            let f = loader.morphism(f, None)?;
            let pb = pullback_coc(&g, &f)?;
            let mut r = TheoremReport::new(format!("pullback in {}", pb.tensor.tensor.dim()));
            r.observe("pullback.dim", true, pb.object().dim().to_string());
            r.observe("pullback.basis", true, pb.object().labels().join(", "));
            r
        }
        Command::Strong { input } => {
            let ext = loader.extension(input, None)?;
            let v = is_strong_split_extension(&ext)?;
            let mut r = TheoremReport::new(input.clone());
            r.observe("kernel.dim", true, ext.kernel().source().dim().to_string());
            let witness = v.witness.map(|(l, _)| format!(", witness {l}")).unwrap_or_default();
            r.observe("strong", v.strong, format!("join closure dim {} of {}{witness}", v.closure_dim, v.dim));
            r
        }
        Command::Stablystrong { input, monoids } => {
            let ext = loader.extension(input, None)?;
            let named = family_monoids(&loader, monoids)?;
            let family = default_stable_family(ext.base(), &named)?;
            let maps: Vec<_> = family.iter().map(|(_, h)| h.clone()).collect();
            let verdicts = is_stably_strong(&ext, &maps)?;
            let mut r = TheoremReport::new(input.clone());
            for ((name, _), v) in family.iter().zip(&verdicts) {
                let witness = v.witness.as_ref().map(|(l, _)| format!(", witness {l}")).unwrap_or_default();
                r.observe(
                    format!("pullback.{name}"),
                    v.strong,
                    format!("join closure dim {} of {}{witness}", v.closure_dim, v.dim),
                );
            }
            r.observe("stably-strong", verdicts.iter().all(|v| v.strong), format!("{} test maps", verdicts.len()));
            r
        }
        Command::Theorem2 { input, monoid } => {
            let b = loader.bialgebra(input, None)?;
            let expected = monoid.as_ref().map(|m| loader.monoid(m, None)).transpose()?;
            let catalog = loader.load_catalog()?;
            theorem2_report(input, &b, expected.as_deref(), &catalog.monoids)?
        }
        Command::Section4 { input, left, right } => pairing(&loader, input, left, right)?,
        Command::Selftest => {
            let catalog: LoadedCatalog = loader.load_catalog()?;
            selftest(&catalog)
        }
    };
    Ok(Output::report(report, fmt))
}

fn family_monoids(
    loader: &Loader,
    refs: &[String],
) -> Result<Vec<(String, Arc<crate::finmon::FiniteMonoid>)>, HarnessError> {
    if refs.is_empty() {
        return Ok(loader.load_catalog()?.monoids);
    }
    refs.iter().map(|r| Ok((r.trim_start_matches('@').to_string(), loader.monoid(r, None)?))).collect()
}

fn check(loader: &Loader, input: &str) -> Result<TheoremReport, HarnessError> {
    let loc = loader.locate(input, None)?;
    let mut r = TheoremReport::new(input.to_string());
    r.caveat = false;
    match loader.kind(&loc)? {
        DocKind::Monoid => {
            let m = loader.monoid_at(&loc)?;
            r.check("monoid.valid", true, format!("{} elements", m.order()));
            r.observe("monoid.is-group", m.is_group(), m.to_string());
        }
        DocKind::Bialgebra => {
            let raw = format::parse_raw_bialgebra(&loader.read(&loc)?)
                .map_err(|e| HarnessError::InFile { path: loc.to_string(), source: Box::new(e) })?;
            let report = raw.axiom_report()?;
            for (axiom, violation) in &report {
                let detail = violation.as_ref().map(|v| v.to_string()).unwrap_or_else(|| "holds".into());
                r.check(format!("axiom.{}", axiom.name()), violation.is_none(), detail);
            }
            if report.iter().all(|(_, v)| v.is_none()) {
                let b = loader.bialgebra_at(&loc)?;
                r.observe("cocommutative", b.is_cocommutative(), format!("dim {}, {}", b.dim(), b.field()));
            }
            debug_assert_eq!(report.len(), Axiom::ALL.len());
        }
        DocKind::Morphism => match loader.morphism_at(&loc) {
            Ok(h) => {
                for law in [MorphismLaw::Mul, MorphismLaw::Unit, MorphismLaw::Comul, MorphismLaw::Counit] {
                    r.check(format!("morphism.{law}"), true, "holds");
                }
                r.observe("morphism.injective", h.is_injective(), format!("rank {}", h.image().dim()));
            }
            Err(HarnessError::InFile { source, .. })
                if matches!(*source, HarnessError::Bialg(crate::bialg::BialgError::Morphism { .. })) =>
            {
                r.check("morphism.laws", false, source.to_string());
            }
            Err(e) => return Err(e),
        },
        DocKind::Extension => {
            let ext = loader.extension_at(&loc)?;
            r.check(
                "extension.valid",
                true,
                format!(
                    "kernel dim {}, middle dim {}, base dim {}",
                    ext.kernel().source().dim(),
                    ext.middle().dim(),
                    ext.base().dim()
                ),
            );
        }
    }
    Ok(r)
}

fn pairing(loader: &Loader, input: &str, left: &str, right: &str) -> Result<TheoremReport, HarnessError> {
    let loc = loader.locate(input, None)?;
    let mut r = TheoremReport::new(format!("{input} into {left} ⊗ {right}"));
    let x = loader.bialgebra(left, None)?;
    let y = loader.bialgebra(right, None)?;
    let tp = tensor_bialgebra(&x, &y)?;
    let mut morphisms = Vec::new();
    if loader.kind(&loc)? == DocKind::Monoid {
        let m = loader.monoid_at(&loc)?;
        let product = Arc::new(loader.monoid(left, None)?.product(&*loader.monoid(right, None)?));
        let source = Arc::new(monoid_algebra(&m, loader.field()));
        for phi in enumerate_homs(&m, &product, ENUMERATION_GUARD)? {
            let images: Vec<&str> = phi.map().iter().map(|&p| product.label(p)).collect();
            morphisms.push((
                format!("hom.[{}]", images.join(",")),
                monoid_algebra_map_between(&phi, source.clone(), tp.tensor.clone()),
            ));
        }
    } else {
        let h = loader.morphism_at(&loc)?;
        morphisms.push(("morphism".to_string(), h));
    }
    let mut all = true;
    for (name, h) in &morphisms {
        let v = section4_identity_check(h, &tp)?;
        all &= v.holds;
        let detail =
            v.witness.map(|w| format!("columns differ at {w}")).unwrap_or_else(|| "h = (π_X h ⊗ π_Y h) ∘ Δ".into());
        r.check(name.clone(), v.holds, detail);
    }
    r.observe("identity.all", all, format!("{} morphisms", morphisms.len()));
    Ok(r)
}
