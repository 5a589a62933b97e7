use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cohomology::{
    apply_coboundary, class_of, cohomology_table, connecting_hom, total_cochain_dim, CohomologyClass,
    DEFAULT_MAX_DEGREE,
};
use crate::crossed::{
    choose_sections, classify2, leibniz_choose_sections, leibniz_classify2, leibniz_theta, leibniz_theta_table,
    leibniz_yoneda_crossed_module, theta, theta_table, yoneda_crossed_module,
};
use crate::exactlin::kernel;
use crate::extensions::{baer_sum, classify_n2, pushout, split_detect};

use super::document::{matrix_to_text, CommandDoc};
use super::workspace::{
    entries_text, parse_flavor, CrossedObject, ModuleObject, MorphismObject, SequenceObject, Workspace,
};
use super::{CliError, Location};

/// Above this many cochain coordinates a cohomology request is flagged.
pub const COCHAIN_DIM_WARNING: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Check,
    Cohomology,
    Theta,
    Classify,
    BaerSum,
    Pushout,
    Connecting,
    Yoneda,
    Report,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::Check,
        Command::Cohomology,
        Command::Theta,
        Command::Classify,
        Command::BaerSum,
        Command::Pushout,
        Command::Connecting,
        Command::Yoneda,
        Command::Report,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Cohomology => "cohomology",
            Command::Theta => "theta",
            Command::Classify => "classify",
            Command::BaerSum => "baer-sum",
            Command::Pushout => "pushout",
            Command::Connecting => "connecting",
            Command::Yoneda => "yoneda",
            Command::Report => "report",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Command::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| format!("unknown command {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportItem {
    pub status: Status,
    pub command: String,
    pub subject: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub field: String,
    pub items: Vec<ReportItem>,
    pub warnings: Vec<String>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    fn new(command: Command, ws: &Workspace) -> Self {
        Report {
            command: command.to_string(),
            field: ws.field.to_string(),
            items: Vec::new(),
            warnings: Vec::new(),
            passed: 0,
            failed: 0,
        }
    }

    fn push(&mut self, status: Status, command: &str, subject: &str, message: impl Into<String>, data: Option<Value>) {
        match status {
            Status::Pass => self.passed += 1,
            Status::Fail => self.failed += 1,
        }
        self.items.push(ReportItem {
            status,
            command: command.to_string(),
            subject: subject.to_string(),
            message: message.into(),
            data,
        });
    }

    fn pass(&mut self, command: &str, subject: &str, message: impl Into<String>, data: Option<Value>) {
        self.push(Status::Pass, command, subject, message, data);
    }

    fn fail(&mut self, command: &str, subject: &str, message: impl Into<String>) {
        self.push(Status::Fail, command, subject, message, None);
    }

    /// Whether every requested check passed.
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn render_human(&self) -> String {
        let mut out = format!("{} (field {})\n", self.command, self.field);
        for it in &self.items {
            let tag = match it.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{tag} {} {}: {}\n", it.command, it.subject, it.message));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Degree cap for `cohomology`; overrides the document.
    pub max_degree: Option<usize>,
}

pub fn run_command(ws: &Workspace, cmd: Command) -> Report {
    run_command_with(ws, cmd, &RunOptions::default())
}

/// Runs the document's requests for `cmd`; when the document lists none,
/// runs `cmd` on every applicable object. `report` checks the workspace
/// and then runs every listed request.
pub fn run_command_with(ws: &Workspace, cmd: Command, opts: &RunOptions) -> Report {
    let mut report = Report::new(cmd, ws);
    let requests: Vec<CommandDoc> = match cmd {
        Command::Report => {
            let mut r = vec![CommandDoc { command: "check".into(), ..Default::default() }];
            r.extend(ws.commands.iter().filter(|c| c.command != "check" && c.command != "report").cloned());
            r
        }
        _ => {
            let listed: Vec<CommandDoc> = ws.commands.iter().filter(|c| c.command == cmd.as_str()).cloned().collect();
            if listed.is_empty() {
                default_requests(ws, cmd)
            } else {
                listed
            }
        }
    };
    for req in &requests {
        execute(ws, req, opts, &mut report);
    }
    report
}

fn default_requests(ws: &Workspace, cmd: Command) -> Vec<CommandDoc> {
    let base = CommandDoc { command: cmd.as_str().into(), ..Default::default() };
    let with = |f: &dyn Fn(&mut CommandDoc)| {
        let mut c = base.clone();
        f(&mut c);
        c
    };
    match cmd {
        Command::Check | Command::Report => vec![base.clone()],
        Command::Cohomology => ws.modules.iter().map(|m| with(&|c| c.module = Some(m.name.clone()))).collect(),
        Command::Theta => ws.crossed_modules.iter().map(|x| with(&|c| c.crossed_module = Some(x.name.clone()))).collect(),
        Command::Classify => ws
            .crossed_modules
            .iter()
            .map(|x| with(&|c| c.crossed_module = Some(x.name.clone())))
            .chain(ws.extensions.iter().map(|e| with(&|c| c.extension = Some(e.name.clone()))))
            .collect(),
        Command::BaerSum => {
            let mut out = Vec::new();
            for (i, a) in ws.extensions.iter().enumerate() {
                for b in &ws.extensions[i..] {
                    if a.value.n() == b.value.n() && a.value.kernel_module() == b.value.kernel_module() {
                        out.push(with(&|c| {
                            c.left = Some(a.name.clone());
                            c.right = Some(b.name.clone());
                        }));
                    }
                }
            }
            out
        }
        Command::Pushout => {
            let mut out = Vec::new();
            for (i, a) in ws.morphisms.iter().enumerate() {
                for b in &ws.morphisms[i + 1..] {
                    let lie = matches!((&a.value, &b.value), (MorphismObject::Lie(_), MorphismObject::Lie(_)));
                    if lie && a.source == b.source {
                        out.push(with(&|c| {
                            c.f = Some(a.name.clone());
                            c.g = Some(b.name.clone());
                        }));
                    }
                }
            }
            out
        }
        Command::Connecting | Command::Yoneda => {
            let mut out = Vec::new();
            for s in &ws.sequences {
                let quotient = ws.morphism(&s.beta).map(|b| b.target.clone()).unwrap_or_default();
                let lie = matches!(s.value, SequenceObject::Lie(_));
                if cmd == Command::Connecting && !lie {
                    continue;
                }
                for z in ws.cochains.iter().filter(|z| z.module == quotient) {
                    if cmd == Command::Yoneda && z.value.degree() != 2 {
                        continue;
                    }
                    out.push(with(&|c| {
                        c.sequence = Some(s.name.clone());
                        c.cochain = Some(z.name.clone());
                    }));
                }
            }
            out
        }
    }
}

fn missing(cmd: &CommandDoc, what: &str) -> CliError {
    CliError::Validation {
        object: cmd.command.clone(),
        message: format!("{} needs {what}", cmd.command),
        location: Location::default(),
    }
}

fn unresolved(cmd: &CommandDoc, kind: &str, name: &str) -> CliError {
    CliError::Unresolved {
        object: cmd.command.clone(),
        kind: kind.to_string(),
        reference: name.to_string(),
        location: Location::default(),
    }
}

/// Validates a listed request against the workspace.
pub(crate) fn check_references(ws: &Workspace, cmd: &CommandDoc) -> Result<(), CliError> {
    let c: Command = cmd.command.parse().map_err(|m: String| CliError::Validation {
        object: cmd.command.clone(),
        message: m,
        location: Location::default(),
    })?;
    let need = |v: &Option<String>, what: &str| v.clone().ok_or_else(|| missing(cmd, what));
    match c {
        Command::Check | Command::Report => {}
        Command::Cohomology => {
            let m = need(&cmd.module, "a module")?;
            let entry = ws.module(&m).ok_or_else(|| unresolved(cmd, "module", &m))?;
            if let Some(f) = &cmd.flavor {
                let flavor = parse_flavor(f).ok_or_else(|| missing(cmd, "flavor ce or leibniz"))?;
                if entry.value.coefficients(flavor).is_none() {
                    return Err(missing(cmd, "a Lie module for the ce flavor"));
                }
            }
        }
        Command::Theta => {
            let x = need(&cmd.crossed_module, "a crossed_module")?;
            ws.crossed_module(&x).ok_or_else(|| unresolved(cmd, "crossed module", &x))?;
        }
        Command::Classify => match (&cmd.crossed_module, &cmd.extension) {
            (Some(x), None) => {
                ws.crossed_module(x).ok_or_else(|| unresolved(cmd, "crossed module", x))?;
            }
            (None, Some(e)) => {
                ws.extension(e).ok_or_else(|| unresolved(cmd, "extension", e))?;
            }
            _ => return Err(missing(cmd, "exactly one of crossed_module and extension")),
        },
        Command::BaerSum => {
            for side in [need(&cmd.left, "left")?, need(&cmd.right, "right")?] {
                ws.extension(&side).ok_or_else(|| unresolved(cmd, "extension", &side))?;
            }
        }
        Command::Pushout => {
            for side in [need(&cmd.f, "f")?, need(&cmd.g, "g")?] {
                ws.morphism(&side).ok_or_else(|| unresolved(cmd, "morphism", &side))?;
            }
        }
        Command::Connecting | Command::Yoneda => {
            let s = need(&cmd.sequence, "a sequence")?;
            let z = need(&cmd.cochain, "a cochain")?;
            ws.sequence(&s).ok_or_else(|| unresolved(cmd, "sequence", &s))?;
            ws.cochain(&z).ok_or_else(|| unresolved(cmd, "cochain", &z))?;
        }
    }
    Ok(())
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

fn class_data(c: &CohomologyClass) -> Value {
    json!({
        "degree": c.degree(),
        "flavor": c.flavor().to_string(),
        "zero": c.is_zero(),
        "canonical": entries_text(c.canonical_form()),
    })
}

fn class_message(c: &CohomologyClass) -> String {
    let rel = if c.is_zero() { "=" } else { "≠" };
    format!("class {rel} 0 in H{}", superscript(c.degree()))
}

/// `expect` as `"zero"`/`"nonzero"`; `None` when absent.
fn expect_zero(cmd: &CommandDoc) -> Result<Option<bool>, String> {
    match &cmd.expect {
        None => Ok(None),
        Some(Value::String(s)) if s == "zero" => Ok(Some(true)),
        Some(Value::String(s)) if s == "nonzero" => Ok(Some(false)),
        Some(other) => Err(format!("expect must be \"zero\" or \"nonzero\", found {other}")),
    }
}

fn report_class(report: &mut Report, cmd: &CommandDoc, subject: &str, c: &CohomologyClass, extra: &str) {
    let mut msg = class_message(c);
    msg.push_str(extra);
    match expect_zero(cmd) {
        Err(e) => report.fail(&cmd.command, subject, e),
        Ok(Some(z)) if z != c.is_zero() => {
            report.fail(&cmd.command, subject, format!("{msg}; expected {}", if z { "zero" } else { "nonzero" }))
        }
        Ok(_) => report.pass(&cmd.command, subject, msg, Some(class_data(c))),
    }
}

fn execute(ws: &Workspace, cmd: &CommandDoc, opts: &RunOptions, report: &mut Report) {
    let c: Command = match cmd.command.parse() {
        Ok(c) => c,
        Err(e) => return report.fail(&cmd.command, "-", e),
    };
    if let Err(e) = check_references(ws, cmd) {
        return report.fail(&cmd.command, "-", e.to_string());
    }
    match c {
        Command::Check | Command::Report => check_all(ws, report),
        Command::Cohomology => run_cohomology(ws, cmd, opts, report),
        Command::Theta => run_theta(ws, cmd, report),
        Command::Classify => run_classify(ws, cmd, report),
        Command::BaerSum => run_baer_sum(ws, cmd, report),
        Command::Pushout => run_pushout(ws, cmd, report),
        Command::Connecting => run_connecting(ws, cmd, report),
        Command::Yoneda => run_yoneda(ws, cmd, report),
    }
}

fn check_all(ws: &Workspace, report: &mut Report) {
    const C: &str = "check";
    for a in &ws.algebras {
        let sc = a.value.structure();
        let kind = match a.value {
            super::workspace::AlgebraObject::Lie(_) => "Lie",
            super::workspace::AlgebraObject::Leibniz(_) => "Leibniz",
        };
        let revalidated = match &a.value {
            super::workspace::AlgebraObject::Lie(x) => crate::algebra::validate_lie(x.structure().clone()).map(|_| ()),
            super::workspace::AlgebraObject::Leibniz(x) => {
                crate::algebra::validate_leibniz(x.structure().clone()).map(|_| ())
            }
        };
        match revalidated {
            Ok(()) => report.pass(C, &a.name, format!("{kind} algebra of dimension {}", sc.dim()), None),
            Err(e) => report.fail(C, &a.name, e.to_string()),
        }
    }
    for m in &ws.modules {
        let res = match &m.value {
            ModuleObject::Lie(r) => r.validate(),
            ModuleObject::Leibniz(r) => r.validate(),
        };
        match res {
            Ok(()) => report.pass(C, &m.name, format!("module of dimension {} over {}", m.value.dim(), m.algebra), None),
            Err(e) => report.fail(C, &m.name, e.to_string()),
        }
    }
    for f in &ws.morphisms {
        report.pass(C, &f.name, format!("module map {} -> {} of rank {}", f.source, f.target, f.value.map().rank()), None);
    }
    for z in &ws.cochains {
        let module = ws.module(&z.module).expect("resolved on load");
        let coeffs = module.value.coefficients(z.value.flavor()).expect("checked on load");
        let closed = apply_coboundary(coeffs.as_ref(), &z.value).is_zero();
        report.pass(
            C,
            &z.name,
            format!(
                "{} cochain of degree {}{}",
                z.value.flavor(),
                z.value.degree(),
                if closed { ", a cocycle" } else { ", not a cocycle" }
            ),
            Some(json!({ "cocycle": closed })),
        );
    }
    for x in &ws.crossed_modules {
        let res = match &x.value {
            CrossedObject::Lie(cm, _) => cm.validate(),
            CrossedObject::Leibniz(cm, _) => cm.validate(),
        };
        let (g, m) = x.value.induced_dims();
        match res {
            Ok(()) => report.pass(
                C,
                &x.name,
                format!("crossed module; dim coker = {g}, dim ker = {m}"),
                Some(json!({ "g_dim": g, "m_dim": m })),
            ),
            Err(e) => report.fail(C, &x.name, e.to_string()),
        }
    }
    for s in &ws.sequences {
        report.pass(C, &s.name, format!("0 -> . -{}-> . -{}-> . -> 0 is exact", s.alpha, s.beta), None);
    }
    for e in &ws.extensions {
        for (node, ok) in e.value.exactness() {
            let subject = format!("{} at {node}", e.name);
            if ok {
                report.pass(C, &subject, "exact", None);
            } else {
                report.fail(C, &subject, format!("EXACTNESS_FAIL({node})"));
            }
        }
        match e.value.validate() {
            Ok(()) => report.pass(C, &e.name, format!("crossed {}-fold extension", e.value.n()), None),
            Err(err) => report.fail(C, &e.name, err.to_string()),
        }
    }
}

fn run_cohomology(ws: &Workspace, cmd: &CommandDoc, opts: &RunOptions, report: &mut Report) {
    let name = cmd.module.as_deref().unwrap_or_default();
    let module = ws.module(name).expect("checked");
    let flavor = cmd.flavor.as_deref().and_then(parse_flavor).unwrap_or_else(|| module.value.default_flavor());
    let coeffs = module.value.coefficients(flavor).expect("checked");
    let max = opts.max_degree.or(cmd.max_degree).unwrap_or(DEFAULT_MAX_DEGREE);
    let total = total_cochain_dim(coeffs.as_ref(), max);
    if total > COCHAIN_DIM_WARNING {
        report.warnings.push(format!("{name}: total cochain dimension {total} exceeds 10^5 up to degree {max}"));
    }
    let dims: Vec<usize> = cohomology_table(coeffs.as_ref(), max).iter().map(|h| h.dim).collect();
    let shown = dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ");
    let msg = format!("{flavor} dim H⁰..H{} = ({shown})", superscript(max));
    let data = json!({ "flavor": flavor.to_string(), "max_degree": max, "dims": dims });
    let subject = name.to_string();
    match &cmd.expect {
        None => report.pass(&cmd.command, &subject, msg, Some(data)),
        Some(v) => match serde_json::from_value::<Vec<usize>>(v.clone()) {
            Err(_) => report.fail(&cmd.command, &subject, "expect must be a list of dimensions"),
            Ok(want) if dims.starts_with(&want) => report.pass(&cmd.command, &subject, msg, Some(data)),
            Ok(want) => report.fail(&cmd.command, &subject, format!("{msg}; expected {want:?}")),
        },
    }
}

fn run_theta(ws: &Workspace, cmd: &CommandDoc, report: &mut Report) {
    let name = cmd.crossed_module.as_deref().unwrap_or_default();
    let x = ws.crossed_module(name).expect("checked");
    let outcome = match &x.value {
        CrossedObject::Lie(cm, pair) => {
            let sections = choose_sections(cm, pair);
            theta_table(cm, pair, &sections).and_then(|table| {
                let z = theta(cm, pair, &sections)?;
                let closed = apply_coboundary(pair.kernel(), &z).is_zero();
                Ok((table.values_in(&kernel(cm.partial())), Some(table.is_alternating()), closed, z))
            })
        }
        CrossedObject::Leibniz(cm, pair) => {
            let sections = leibniz_choose_sections(cm, pair);
            leibniz_theta_table(cm, pair, &sections).and_then(|table| {
                let z = leibniz_theta(cm, pair, &sections)?;
                let closed = apply_coboundary(pair.kernel(), &z).is_zero();
                Ok((table.values_in(&kernel(cm.partial())), None, closed, z))
            })
        }
    };
    match outcome {
        Err(e) => report.fail(&cmd.command, name, e.to_string()),
        Ok((in_kernel, alternating, closed, z)) => {
            let ok = in_kernel && closed && alternating.unwrap_or(true);
            let mut parts = vec![
                format!("values {} ker ∂", if in_kernel { "in" } else { "outside" }),
                format!("δθ {} 0", if closed { "=" } else { "≠" }),
            ];
            if let Some(a) = alternating {
                parts.push(if a { "alternating".into() } else { "not alternating".into() });
            }
            let data = json!({
                "flavor": z.flavor().to_string(),
                "in_kernel": in_kernel,
                "cocycle": closed,
                "alternating": alternating,
                "entries": entries_text(&z),
            });
            if ok {
                report.pass(&cmd.command, name, parts.join(", "), Some(data));
            } else {
                report.fail(&cmd.command, name, parts.join(", "));
            }
        }
    }
}

fn run_classify(ws: &Workspace, cmd: &CommandDoc, report: &mut Report) {
    if let Some(name) = &cmd.crossed_module {
        let x = ws.crossed_module(name).expect("checked");
        let class = match &x.value {
            CrossedObject::Lie(cm, pair) => classify2(cm, pair),
            CrossedObject::Leibniz(cm, pair) => leibniz_classify2(cm, pair),
        };
        match class {
            Ok(c) => report_class(report, cmd, name, &c, ""),
            Err(e) => report.fail(&cmd.command, name, e.to_string()),
        }
        return;
    }
    let name = cmd.extension.as_deref().unwrap_or_default();
    let e = &ws.extension(name).expect("checked").value;
    if e.n() == 2 {
        match classify_n2(e) {
            Ok(c) => report_class(report, cmd, name, &c, ""),
            Err(err) => report.fail(&cmd.command, name, err.to_string()),
        }
        return;
    }
    let degree = superscript(e.n() + 1);
    match (split_detect(e), expect_zero(cmd)) {
        (Err(err), _) => report.fail(&cmd.command, name, err.to_string()),
        (_, Err(msg)) => report.fail(&cmd.command, name, msg),
        (Ok(Some(w)), Ok(None | Some(true))) => report.pass(
            &cmd.command,
            name,
            format!("class = 0 in H{degree}: f has an equivariant retraction"),
            Some(json!({ "split": true, "retraction": matrix_to_text(w.retraction.matrix()) })),
        ),
        (Ok(None), Ok(None)) => report.pass(
            &cmd.command,
            name,
            format!("f has no equivariant retraction; the class in H{degree} is not decided by splitting"),
            Some(json!({ "split": false })),
        ),
        (Ok(None), Ok(Some(false))) => report.pass(
            &cmd.command,
            name,
            "f has no equivariant retraction",
            Some(json!({ "split": false })),
        ),
        (Ok(Some(_)), Ok(Some(false))) => report.fail(&cmd.command, name, "splits, expected a nonzero class"),
        (Ok(None), Ok(Some(true))) => report.fail(&cmd.command, name, "no splitting found, expected zero"),
    }
}

fn run_baer_sum(ws: &Workspace, cmd: &CommandDoc, report: &mut Report) {
    let (l, r) = (cmd.left.as_deref().unwrap_or_default(), cmd.right.as_deref().unwrap_or_default());
    let subject = format!("{l} + {r}");
    let (a, b) = (&ws.extension(l).expect("checked").value, &ws.extension(r).expect("checked").value);
    let sum = match baer_sum(a, b) {
        Ok(s) => s,
        Err(e) => return report.fail(&cmd.command, &subject, e.to_string()),
    };
    let dims: Vec<usize> = std::iter::once(sum.kernel_module().dim())
        .chain(sum.chain().iter().map(|c| c.dim()))
        .chain([sum.base().module().dim(), sum.base().algebra().dim(), sum.g().dim()])
        .collect();
    let mut data = json!({ "n": sum.n(), "dims": dims });
    if sum.n() != 2 {
        return report.pass(&cmd.command, &subject, format!("crossed {}-fold extension with dims {dims:?}", sum.n()), Some(data));
    }
    let classes = (|| Ok::<_, crate::extensions::ExtensionError>((classify_n2(a)?, classify_n2(b)?, classify_n2(&sum)?)))();
    match classes {
        Err(e) => report.fail(&cmd.command, &subject, e.to_string()),
        Ok((ca, cb, cs)) => {
            let additive = cs == ca.add(&cb);
            data["class"] = class_data(&cs);
            let msg = format!("{}; classes {}", class_message(&cs), if additive { "add" } else { "do not add" });
            if additive {
                report.pass(&cmd.command, &subject, msg, Some(data));
            } else {
                report.fail(&cmd.command, &subject, msg);
            }
        }
    }
}

fn run_pushout(ws: &Workspace, cmd: &CommandDoc, report: &mut Report) {
    let (fname, gname) = (cmd.f.as_deref().unwrap_or_default(), cmd.g.as_deref().unwrap_or_default());
    let subject = format!("{fname}, {gname}");
    let (f, g) = (&ws.morphism(fname).expect("checked").value, &ws.morphism(gname).expect("checked").value);
    let (MorphismObject::Lie(f), MorphismObject::Lie(g)) = (f, g) else {
        return report.fail(&cmd.command, &subject, "pushouts are formed of Lie module maps");
    };
    match pushout(f, g) {
        Err(e) => report.fail(&cmd.command, &subject, e.to_string()),
        Ok((d, po)) => {
            let commutes = po.i.compose(&po.f) == po.j.compose(&po.g);
            let data = json!({
                "dim": d.dim(),
                "i": matrix_to_text(po.i.matrix()),
                "j": matrix_to_text(po.j.matrix()),
            });
            if commutes {
                report.pass(&cmd.command, &subject, format!("pushout of dimension {}; i f = j g", d.dim()), Some(data));
            } else {
                report.fail(&cmd.command, &subject, "i f != j g");
            }
        }
    }
}

fn run_connecting(ws: &Workspace, cmd: &CommandDoc, report: &mut Report) {
    let (sname, zname) = (cmd.sequence.as_deref().unwrap_or_default(), cmd.cochain.as_deref().unwrap_or_default());
    let subject = format!("{sname}, {zname}");
    let SequenceObject::Lie(ses) = &ws.sequence(sname).expect("checked").value else {
        return report.fail(&cmd.command, &subject, "connecting maps are computed for Lie module sequences");
    };
    let z = &ws.cochain(zname).expect("checked").value;
    if z.flavor() != crate::cohomology::Flavor::ChevalleyEilenberg
        || z.module_dim() != ses.quotient().dim()
        || z.algebra_dim() != ses.quotient().algebra().dim()
    {
        return report.fail(&cmd.command, &subject, "the cochain does not take values in the quotient module");
    }
    match class_of(ses.quotient(), z).and_then(|c| connecting_hom(ses, &c)) {
        Ok(c) => report_class(report, cmd, &subject, &c, ""),
        Err(e) => report.fail(&cmd.command, &subject, e.to_string()),
    }
}

fn run_yoneda(ws: &Workspace, cmd: &CommandDoc, report: &mut Report) {
    let (sname, zname) = (cmd.sequence.as_deref().unwrap_or_default(), cmd.cochain.as_deref().unwrap_or_default());
    let subject = format!("{sname}, {zname}");
    let z = &ws.cochain(zname).expect("checked").value;
    match &ws.sequence(sname).expect("checked").value {
        SequenceObject::Lie(ses) => {
            let outcome = yoneda_crossed_module(ses, z).and_then(|(cm, pair)| {
                let theta_class = classify2(&cm, &pair)?;
                let delta = class_of(ses.quotient(), z).and_then(|c| connecting_hom(ses, &c))?;
                Ok((cm, theta_class, delta))
            });
            match outcome {
                Err(e) => report.fail(&cmd.command, &subject, e.to_string()),
                Ok((cm, theta_class, delta)) => {
                    if theta_class == delta {
                        let extra = format!(
                            "; equals the connecting class (V of dim {}, L of dim {})",
                            cm.module().dim(),
                            cm.algebra().dim()
                        );
                        report_class(report, cmd, &subject, &theta_class, &extra);
                    } else {
                        report.fail(&cmd.command, &subject, "the classifying class differs from the connecting class");
                    }
                }
            }
        }
        SequenceObject::Leibniz(alpha, beta) => {
            let outcome = leibniz_yoneda_crossed_module(alpha, beta, z).and_then(|(cm, pair)| {
                let t = leibniz_theta(&cm, &pair, &leibniz_choose_sections(&cm, &pair))?;
                let closed = apply_coboundary(pair.kernel(), &t).is_zero();
                let class = leibniz_classify2(&cm, &pair)?;
                Ok((closed, class))
            });
            match outcome {
                Err(e) => report.fail(&cmd.command, &subject, e.to_string()),
                Ok((true, class)) => report_class(report, cmd, &subject, &class, "; θ is a Leibniz 3-cocycle"),
                Ok((false, _)) => report.fail(&cmd.command, &subject, "θ is not a cocycle"),
            }
        }
    }
}
