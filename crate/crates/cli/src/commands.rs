use std::path::Path;
use std::sync::Arc;

use falab::fusion::{build_g0, chi_ad_nonvanishing, g0_cross_checks};
use falab::hopf::matrix_json;
use falab::report::Clause;
use falab::rep::{analyze_module, integrality_check, verify_idempotent_theorems, WeakForm};
use falab::{Algebra, Element, Field, FrobeniusStructure, FusionRing, Hopf, Representation, Scalar};
use serde_json::{json, Value};

use crate::doc::ReportDoc;
use crate::load::{modules_in, parse_lambda, CliError, Kind, Loader};
use crate::{Cli, Command, G0Command};

pub enum Output {
    Report(ReportDoc),
    File(Value),
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let mut loader = Loader::from_env()?;
    let doc = match &cli.command {
        Command::Make { name, field } => {
            let f = field.as_deref().map(Field::parse).transpose().map_err(|e| CliError::Usage(format!("--field: {e}")))?;
            let v = crate::make::make(name, f.as_ref()).map_err(|e| CliError::Usage(format!("make {name}: {e}")))?;
            return Ok(Output::File(v));
        }
        Command::Check { file } => check(&mut loader, file)?,
        Command::Frobenius { algebra, lambda } => frobenius(&mut loader, algebra, lambda)?,
        Command::Integrals { hopf } => integrals(&mut loader, hopf)?,
        Command::HopfReport { hopf } => hopf_report(&mut loader, hopf)?,
        Command::ModuleReport { algebra, module, lambda, basis_order } => {
            module_report(&mut loader, algebra, module, lambda.as_deref(), *basis_order)?
        }
        Command::G0(G0Command::Build { hopf, modules, fusion_out }) => g0_build(&mut loader, hopf, modules, fusion_out.as_deref())?,
        Command::G0(G0Command::Spectrum { fusion }) => spectrum(&mut loader, fusion)?,
        Command::G0(G0Command::SsLocus { fusion }) => ss_locus(&mut loader, fusion)?,
        Command::G0(G0Command::ClassEq { fusion }) => class_eq(&mut loader, fusion)?,
        Command::Zhu { fusion } => zhu(&mut loader, fusion)?,
    };
    Ok(Output::Report(doc))
}

fn name_of(p: &Path) -> String {
    p.display().to_string()
}

fn scalars(s: &[Scalar]) -> Value {
    s.iter().map(Scalar::to_json).collect()
}

fn ints(v: &[impl ToString]) -> Value {
    v.iter().map(|x| Value::String(x.to_string())).collect()
}

fn finish(mut doc: ReportDoc, loader: Loader) -> ReportDoc {
    doc.inputs = loader.inputs;
    doc
}

fn check(loader: &mut Loader, file: &Path) -> Result<ReportDoc, CliError> {
    const ANCHOR: &str = "input validation";
    let path = name_of(file);
    let v = loader.read(file)?;
    let kind = Kind::of(&v);
    let mut doc = ReportDoc::new("check");
    doc.fact("kind", json!(kind.as_str()));
    let input = |e| CliError::input(&path, e);
    match kind {
        Kind::Algebra => {
            let a = falab::io::algebra_from_json(&v, loader.max_dim).map_err(input)?;
            algebra_facts(&mut doc, &a);
            doc.stage::<CliError>("axioms", || Ok(vec![Clause::check("associative unital algebra", ANCHOR, true, json!(a.dim()), Value::Null)]))?;
        }
        Kind::Hopf => {
            let h = falab::io::hopf_from_json(&v, loader.max_dim).map_err(input)?;
            algebra_facts(&mut doc, h.algebra());
            doc.fact("involutory", json!(h.is_involutory()));
            let mut clauses = vec![Clause::check("Hopf axioms", ANCHOR, true, json!(h.dim()), Value::Null)];
            if v.get("modules").is_some() {
                let mods = modules_in(&v, h.algebra(), &path)?;
                doc.fact("modules", json!(mods.iter().map(|(_, m)| m.dim()).collect::<Vec<_>>()));
                clauses.push(Clause::check("module axioms", ANCHOR, true, json!(mods.len()), Value::Null));
            }
            doc.stage::<CliError>("axioms", || Ok(clauses))?;
        }
        Kind::Module => {
            let a = loader.module_parent(&v, file)?;
            let (_, m) = modules_in(&v, &a, &path)?.remove(0);
            doc.fact("dim", json!(m.dim()));
            doc.fact("character", scalars(m.character()));
            doc.fact("end_dim", json!(m.end_dim()));
            doc.stage::<CliError>("axioms", || Ok(vec![Clause::check("module axioms", ANCHOR, true, json!(m.dim()), Value::Null)]))?;
        }
        Kind::Fusion => {
            let inner = v.get("facts").and_then(|f| f.get("fusion")).or_else(|| v.get("fusion")).unwrap_or(&v);
            let fr = falab::io::fusion_from_json(inner).map_err(input)?;
            fusion_facts(&mut doc, &fr);
            doc.stage::<CliError>("axioms", || Ok(vec![Clause::check("based ring axioms", ANCHOR, true, json!(fr.rank()), Value::Null)]))?;
        }
    }
    Ok(finish(doc, take(loader)))
}

fn algebra_facts(doc: &mut ReportDoc, a: &Arc<Algebra>) {
    doc.fact("dim", json!(a.dim()));
    doc.fact("field", a.field().to_json());
    doc.fact("commutative", json!(a.is_commutative()));
}

fn fusion_facts(doc: &mut ReportDoc, fr: &FusionRing) {
    doc.fact("rank", json!(fr.rank()));
    doc.fact("labels", json!(fr.labels()));
    doc.fact("dims", json!(fr.dims()));
    doc.fact("dim_h", json!(fr.dim_h()));
    doc.fact("commutative", json!(fr.is_commutative()));
}

fn take(loader: &mut Loader) -> Loader {
    std::mem::replace(loader, Loader { max_dim: loader.max_dim, inputs: Vec::new() })
}

fn frobenius(loader: &mut Loader, file: &Path, lambda: &str) -> Result<ReportDoc, CliError> {
    let path = name_of(file);
    let (a, _, _) = loader.algebra(file)?;
    let l = parse_lambda(lambda, a.field(), a.dim())?;
    let fs = FrobeniusStructure::new(&a, l).map_err(|e| CliError::input(&path, e))?;
    let mut doc = ReportDoc::new("frobenius");
    frobenius_facts(&mut doc, &fs);
    doc.stage("frobenius", || frobenius_clauses(&fs).map_err(|e| CliError::input(&path, e)))?;
    Ok(finish(doc, take(loader)))
}

fn frobenius_facts(doc: &mut ReportDoc, fs: &FrobeniusStructure) {
    let sep = fs.is_separable();
    doc.fact("gram_rank", json!(fs.gram().rank()));
    doc.fact("symmetric", json!(fs.is_symmetric()));
    doc.fact("nakayama_is_identity", json!(fs.nakayama().is_identity()));
    doc.fact("nakayama", matrix_json(fs.nakayama()));
    doc.fact("dual_basis", fs.dual_basis().iter().map(Element::to_json).collect());
    doc.fact("casimir_element", fs.casimir_element().to_json());
    doc.fact("casimir_ideal_dim", json!(fs.casimir_ideal_basis().len()));
    doc.fact("separable", json!(sep.separable));
    doc.fact("witness", sep.witness.as_ref().map_or(Value::Null, Element::to_json));
}

fn frobenius_clauses(fs: &FrobeniusStructure) -> falab::Result<Vec<Clause>> {
    let a = fs.algebra();
    let dual = fs.check_dual_bases();
    let mut out = vec![
        Clause::check("a = sum beta(a, y_i) x_i on the basis", "dual bases", dual.is_ok(), json!(dual.err()), Value::Null),
        Clause::check("Nakayama map is an algebra automorphism", "Nakayama automorphism", fs.nakayama_is_automorphism(), Value::Null, Value::Null),
    ];
    if fs.is_symmetric() {
        out.push(Clause::compare("z = c(1)", "Casimir operator", fs.casimir_apply(&a.unit())?.to_json(), fs.casimir_element().to_json()));
    } else {
        out.push(Clause::skipped("z = c(1)", "Casimir operator", "form is not symmetric"));
    }
    let sep = fs.is_separable();
    let in_ideal = match &sep.witness {
        Some(w) => fs.casimir_apply(w)? == a.unit(),
        None => !sep.separable,
    };
    out.push(Clause::check("separability witness maps to 1", "Casimir ideal", in_ideal, json!(sep.separable), Value::Null));
    Ok(out)
}

fn integral_facts(doc: &mut ReportDoc, h: &Hopf) -> falab::Result<falab::hopf::MaschkeReport> {
    let ints = h.integrals()?;
    let m = h.maschke_report()?;
    doc.fact("right_integral", ints.right.to_json());
    doc.fact("left_integral", ints.left.to_json());
    doc.fact("unimodular", json!(ints.unimodular));
    doc.fact("involutory", json!(ints.involutory));
    doc.fact("dim_eps", m.dim_eps.to_json());
    doc.fact("separable", json!(m.separable));
    doc.fact("idempotent_integral", m.idempotent_integral.as_ref().map_or(Value::Null, Element::to_json));
    Ok(m)
}

fn integrals(loader: &mut Loader, file: &Path) -> Result<ReportDoc, CliError> {
    let path = name_of(file);
    let (h, _) = loader.hopf(file)?;
    let mut doc = ReportDoc::new("integrals");
    let m = integral_facts(&mut doc, &h).map_err(|e| CliError::input(&path, e))?;
    doc.stage::<CliError>("maschke", || Ok(m.clauses))?;
    Ok(finish(doc, take(loader)))
}

fn hopf_report(loader: &mut Loader, file: &Path) -> Result<ReportDoc, CliError> {
    let path = name_of(file);
    let err = |e| CliError::input(&path, e);
    let (h, _) = loader.hopf(file)?;
    let mut doc = ReportDoc::new("hopf-report");
    let m = integral_facts(&mut doc, &h).map_err(err)?;
    let hf = h.frobenius_from_integrals().map_err(err)?;
    doc.fact("lambda", scalars(&hf.pair.lambda));
    doc.fact("antipode_square_inner", json!(h.antipode_square_inner().is_some()));
    let sym = h.symmetry_suite().map_err(err)?;
    doc.fact("symmetric", json!(sym.symmetric));
    doc.fact("dual_symmetric", json!(sym.dual_symmetric));
    doc.fact("bi_symmetric", json!(sym.bi_symmetric));
    doc.fact("lambda_is_trace", json!(sym.lambda_is_trace));
    doc.fact("b_lambda", matrix_json(&sym.b_lambda));
    doc.stage::<CliError>("frobenius from integrals", || {
        let mut out = vec![
            Clause::check("dual bases from the integral agree with the Gram inverse", "dual bases of an integral pair", hf.dual_bases_agree, Value::Null, Value::Null),
            Clause::check("form is orthogonal for the hit action", "dual bases of an integral pair", hf.orthogonal, Value::Null, Value::Null),
            Clause::check("left integral is the antipode image", "integrals", hf.integrals.left_is_antipode_image, Value::Null, Value::Null),
        ];
        out.extend(frobenius_clauses(&hf.frobenius).map_err(err)?);
        Ok(out)
    })?;
    doc.stage::<CliError>("maschke", || Ok(m.clauses))?;
    doc.stage::<CliError>("symmetry", || Ok(sym.clauses))?;
    Ok(finish(doc, take(loader)))
}

fn module_report(loader: &mut Loader, alg: &Path, module: &Path, lambda: Option<&str>, basis_order: bool) -> Result<ReportDoc, CliError> {
    let apath = name_of(alg);
    let (a, hopf, _) = loader.algebra(alg)?;
    let l = match (lambda, &hopf) {
        (Some(t), _) => parse_lambda(t, a.field(), a.dim())?,
        (None, Some(h)) => h.frobenius_from_integrals().map_err(|e| CliError::input(&apath, e))?.pair.lambda,
        (None, None) => return Err(CliError::Usage("module-report: --lambda is required when the algebra is not Hopf".into())),
    };
    let fs = FrobeniusStructure::new(&a, l).map_err(|e| CliError::input(&apath, e))?;
    let mpath = name_of(module);
    let v = loader.read(module)?;
    let mods = modules_in(&v, &a, &mpath)?;
    let mut doc = ReportDoc::new("module-report");
    doc.fact("symmetric", json!(fs.is_symmetric()));
    doc.fact("separable", json!(fs.is_separable().separable));
    let mut facts = Vec::new();
    for (i, (label, m)) in mods.iter().enumerate() {
        let label = label.clone().unwrap_or_else(|| format!("M{i}"));
        let an = analyze_module(&fs, m).map_err(|e| CliError::input(&mpath, e))?;
        facts.push(json!({
            "label": label,
            "dim": m.dim(),
            "character": scalars(m.character()),
            "end_dim": an.end_dim,
            "schur": an.schur,
            "z": an.z.to_json(),
            "index": an.index().map_or_else(|e| json!(e.to_string()), Scalar::to_json),
            "idempotent": an.idempotent().map_or(Value::Null, Element::to_json),
            "omega": an.omega.as_ref().map_or(Value::Null, |om| om.iter().map(|(c, w)| json!([c.to_json(), w.to_json()])).collect()),
        }));
        doc.stage::<CliError>(&format!("{label}: idempotent"), || Ok(verify_idempotent_theorems(&fs, m, &an)))?;
        if basis_order {
            let cert = WeakForm::basis_order("order spanned by the basis");
            doc.stage(&format!("{label}: integrality"), || integrality_check(&fs, m, &an, Some(&cert)).map_err(|e| CliError::input(&mpath, e)))?;
        }
        if let Some(h) = &hopf {
            doc.stage::<CliError>(&format!("{label}: Hopf index"), || Ok(hopf_index(h, m)))?;
        }
    }
    doc.fact("modules", Value::Array(facts));
    Ok(finish(doc, take(loader)))
}

fn hopf_index(h: &Hopf, m: &Representation) -> Vec<Clause> {
    match h.hopf7_report(m) {
        Ok(c) => c,
        Err(e) => vec![Clause::skipped("index is eps(Lambda)/dim M", "separable involutory Hopf index formula", e.to_string())],
    }
}

fn g0_build(loader: &mut Loader, file: &Path, modules: &[std::path::PathBuf], fusion_out: Option<&Path>) -> Result<ReportDoc, CliError> {
    let path = name_of(file);
    let (h, hv) = loader.hopf(file)?;
    let mut mods = Vec::new();
    if modules.is_empty() {
        if hv.get("modules").is_none() {
            return Err(CliError::Usage(format!("g0 build: {path} has no \"modules\"; pass module files")));
        }
        mods = modules_in(&hv, h.algebra(), &path)?;
    }
    for m in modules {
        let v = loader.read(m)?;
        mods.extend(modules_in(&v, h.algebra(), &name_of(m))?);
    }
    let labels: Vec<String> = mods.iter().enumerate().map(|(i, (l, _))| l.clone().unwrap_or_else(|| format!("V{i}"))).collect();
    let reps: Vec<Representation> = mods.into_iter().map(|(_, m)| m).collect();
    let central = hv
        .get("central_in_dual")
        .and_then(Value::as_array)
        .map(|a| a.iter().map(|b| b.as_bool().unwrap_or(false)).collect::<Vec<_>>())
        .filter(|c| c.len() == reps.len());
    let err = |e| CliError::input(&path, e);
    let fr = build_g0(&h, &reps, labels, central).map_err(err)?;
    let mut doc = ReportDoc::new("g0 build");
    fusion_facts(&mut doc, &fr);
    doc.fact("fusion", fr.to_json());
    doc.stage("cross checks", || g0_cross_checks(&h, &reps, &fr).map_err(err))?;
    doc.stage::<CliError>("adjoint class", || Ok(fr.adjoint_class().clauses))?;
    doc.stage("regular class", || fr.regular_class_checks().map_err(err))?;
    if let Some(Value::Array(gl)) = hv.get("group_likes") {
        let f = h.field();
        let elems = gl
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let loc = format!("$.group_likes[{i}]");
                let a = g.as_array().filter(|a| a.len() == h.dim()).ok_or_else(|| err(falab::Error::Format(format!("{loc}: expected {} scalars", h.dim()))))?;
                let c = a.iter().map(|x| f.scalar_from_json(x)).collect::<falab::Result<Vec<_>>>().map_err(|e| err(falab::Error::Format(format!("{loc}: {e}"))))?;
                h.algebra().element(c).map_err(err)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let r = chi_ad_nonvanishing(&h, &fr, &reps, &elems, None).map_err(err)?;
        doc.fact("chi_ad", scalars(&r.values));
        doc.stage::<CliError>("adjoint character", || Ok(r.clauses))?;
    }
    if let Some(out) = fusion_out {
        let mut s = serde_json::to_string_pretty(&fr.to_json()).expect("json");
        s.push('\n');
        std::fs::write(out, s).map_err(|e| CliError::Io { path: name_of(out), message: e.to_string() })?;
    }
    Ok(finish(doc, take(loader)))
}

fn spectrum(loader: &mut Loader, file: &Path) -> Result<ReportDoc, CliError> {
    let path = name_of(file);
    let fr = loader.fusion(file)?;
    let mut doc = ReportDoc::new("g0 spectrum");
    let ac = fr.adjoint_class();
    let s = fr.adjoint_spectrum().map_err(|e| CliError::input(&path, e))?;
    doc.fact("dim_h", json!(fr.dim_h()));
    doc.fact("adjoint_class", ints(&ac.z));
    doc.fact("eigenvalues", ints(&s.eigenvalues));
    doc.fact("complete", json!(s.complete));
    doc.fact("char_poly", scalars(&s.char_poly));
    doc.stage::<CliError>("adjoint class", || Ok(ac.clauses))?;
    doc.stage::<CliError>("spectrum", || Ok(s.clauses))?;
    Ok(finish(doc, take(loader)))
}

fn ss_locus(loader: &mut Loader, file: &Path) -> Result<ReportDoc, CliError> {
    let path = name_of(file);
    let fr = loader.fusion(file)?;
    let mut doc = ReportDoc::new("g0 ss-locus");
    let s = fr.ss_locus_mod_p().map_err(|e| CliError::input(&path, e))?;
    doc.fact("dim_h", json!(fr.dim_h()));
    doc.fact("d", json!(s.d.to_string()));
    doc.fact("primes", s.primes.iter().map(|r| json!({"p": r.p, "semisimple": r.semisimple, "higman": r.higman})).collect());
    doc.stage::<CliError>("ss locus", || Ok(s.clauses))?;
    Ok(finish(doc, take(loader)))
}

fn class_eq(loader: &mut Loader, file: &Path) -> Result<ReportDoc, CliError> {
    let path = name_of(file);
    let fr = loader.fusion(file)?;
    let mut doc = ReportDoc::new("g0 class-eq");
    let ce = fr.class_equation_check().map_err(|e| CliError::input(&path, e))?;
    doc.fact("dim_h", json!(fr.dim_h()));
    doc.fact("complete", json!(ce.complete));
    doc.fact(
        "rows",
        ce.rows
            .iter()
            .map(|r| {
                json!({
                    "values": r.values.as_ref().map_or(Value::Null, |v| ints(v)),
                    "omega_z": r.omega_z.to_string(),
                    "quotient": r.quotient.as_ref().map(ToString::to_string),
                    "divides": r.divides,
                })
            })
            .collect(),
    );
    doc.stage::<CliError>("class equation", || Ok(ce.clauses))?;
    Ok(finish(doc, take(loader)))
}

fn zhu(loader: &mut Loader, file: &Path) -> Result<ReportDoc, CliError> {
    let path = name_of(file);
    let fr = loader.fusion(file)?;
    let mut doc = ReportDoc::new("zhu");
    doc.fact("dim_h", json!(fr.dim_h()));
    doc.fact(
        "rows",
        fr.zhu_divisibility()
            .iter()
            .map(|r| json!({"label": r.label, "dim": r.dim, "divides": r.divides, "quotient": r.quotient}))
            .collect(),
    );
    doc.stage::<CliError>("divisibility", || Ok(fr.zhu_clauses()))?;
    doc.stage("regular class", || fr.regular_class_checks().map_err(|e| CliError::input(&path, e)))?;
    Ok(finish(doc, take(loader)))
}
