use std::collections::HashSet;
use std::sync::Arc;

use crate::algebra::{
    adjoint, catalog, LeibnizAlgebra, LeibnizModule, LeibnizModuleMorphism, LieAlgebra, ModuleMorphism, Representation,
    StructureConstants,
};
use crate::cohomology::tuples::sort_with_sign;
use crate::cohomology::{Cochain, Coefficients, Flavor, ShortExactSequence};
use crate::crossed::{CrossedModule, InducedPair, LeibnizCrossedModule, LeibnizInducedPair};
use crate::exactlin::{image, kernel, Field, LinearMap, Matrix, Scalar};
use crate::extensions::CrossedExtension;

use super::document::{
    matrix_to_text, AlgebraDoc, AlgebraKind, BracketDoc, CochainDoc, CommandDoc, CrossedModuleDoc, Document, EntryDoc,
    ExtensionDoc, LinkDoc, MatrixText, ModuleDoc, MorphismDoc, ScalarText, SequenceDoc,
};
use super::{CliError, Location};

#[derive(Clone, Debug)]
pub enum AlgebraObject {
    Lie(Arc<LieAlgebra>),
    Leibniz(Arc<LeibnizAlgebra>),
}

impl AlgebraObject {
    pub fn structure(&self) -> &StructureConstants {
        match self {
            AlgebraObject::Lie(a) => a.structure(),
            AlgebraObject::Leibniz(a) => a.structure(),
        }
    }

    pub fn kind(&self) -> AlgebraKind {
        match self {
            AlgebraObject::Lie(_) => AlgebraKind::Lie,
            AlgebraObject::Leibniz(_) => AlgebraKind::Leibniz,
        }
    }
}

#[derive(Clone, Debug)]
pub enum ModuleObject {
    Lie(Representation),
    Leibniz(LeibnizModule),
}

impl ModuleObject {
    pub fn dim(&self) -> usize {
        match self {
            ModuleObject::Lie(m) => m.dim(),
            ModuleObject::Leibniz(m) => m.dim(),
        }
    }

    /// Coefficients for the complex of the requested flavor. A Lie module
    /// also has a Leibniz complex; a Leibniz module has no CE complex.
    pub fn coefficients(&self, flavor: Flavor) -> Option<Box<dyn Coefficients>> {
        match (self, flavor) {
            (ModuleObject::Lie(m), Flavor::ChevalleyEilenberg) => Some(Box::new(m.clone())),
            (ModuleObject::Lie(m), Flavor::Leibniz) => Some(Box::new(LeibnizModule::from_lie(m))),
            (ModuleObject::Leibniz(m), Flavor::Leibniz) => Some(Box::new(m.clone())),
            (ModuleObject::Leibniz(_), Flavor::ChevalleyEilenberg) => None,
        }
    }

    pub fn default_flavor(&self) -> Flavor {
        match self {
            ModuleObject::Lie(_) => Flavor::ChevalleyEilenberg,
            ModuleObject::Leibniz(_) => Flavor::Leibniz,
        }
    }
}

#[derive(Clone, Debug)]
pub enum MorphismObject {
    Lie(ModuleMorphism),
    Leibniz(LeibnizModuleMorphism),
}

impl MorphismObject {
    pub fn map(&self) -> &LinearMap {
        match self {
            MorphismObject::Lie(f) => f.map(),
            MorphismObject::Leibniz(f) => f.map(),
        }
    }
}

#[derive(Clone, Debug)]
pub enum CrossedObject {
    Lie(CrossedModule, InducedPair),
    Leibniz(LeibnizCrossedModule, LeibnizInducedPair),
}

impl CrossedObject {
    pub fn partial(&self) -> &LinearMap {
        match self {
            CrossedObject::Lie(cm, _) => cm.partial(),
            CrossedObject::Leibniz(cm, _) => cm.partial(),
        }
    }

    /// `(dim g, dim M)` of the induced pair.
    pub fn induced_dims(&self) -> (usize, usize) {
        match self {
            CrossedObject::Lie(_, p) => (p.g().dim(), p.kernel().dim()),
            CrossedObject::Leibniz(_, p) => (p.g().dim(), p.kernel().dim()),
        }
    }
}

#[derive(Clone, Debug)]
pub enum SequenceObject {
    Lie(ShortExactSequence),
    Leibniz(LeibnizModuleMorphism, LeibnizModuleMorphism),
}

#[derive(Clone, Debug)]
pub struct AlgebraEntry {
    pub name: String,
    pub value: AlgebraObject,
}

#[derive(Clone, Debug)]
pub struct ModuleEntry {
    pub name: String,
    pub algebra: String,
    pub value: ModuleObject,
}

#[derive(Clone, Debug)]
pub struct MorphismEntry {
    pub name: String,
    pub source: String,
    pub target: String,
    pub value: MorphismObject,
}

#[derive(Clone, Debug)]
pub struct CochainEntry {
    pub name: String,
    pub module: String,
    pub value: Cochain,
}

#[derive(Clone, Debug)]
pub struct CrossedEntry {
    pub name: String,
    pub algebra: String,
    pub module: String,
    pub value: CrossedObject,
}

#[derive(Clone, Debug)]
pub struct SequenceEntry {
    pub name: String,
    pub alpha: String,
    pub beta: String,
    pub value: SequenceObject,
}

#[derive(Clone, Debug)]
pub struct ExtensionEntry {
    pub name: String,
    pub g: String,
    pub m: String,
    pub chain: Vec<String>,
    pub base: String,
    pub value: CrossedExtension,
}

/// A fully resolved and validated document.
#[derive(Clone, Debug)]
pub struct Workspace {
    pub field: Field,
    pub algebras: Vec<AlgebraEntry>,
    pub modules: Vec<ModuleEntry>,
    pub morphisms: Vec<MorphismEntry>,
    pub cochains: Vec<CochainEntry>,
    pub crossed_modules: Vec<CrossedEntry>,
    pub sequences: Vec<SequenceEntry>,
    pub extensions: Vec<ExtensionEntry>,
    pub commands: Vec<CommandDoc>,
}

fn find<'a, T>(items: &'a [T], name: &str, key: impl Fn(&T) -> &str) -> Option<&'a T> {
    items.iter().find(|x| key(x) == name)
}

impl Workspace {
    pub fn algebra(&self, name: &str) -> Option<&AlgebraEntry> {
        find(&self.algebras, name, |e| &e.name)
    }

    pub fn module(&self, name: &str) -> Option<&ModuleEntry> {
        find(&self.modules, name, |e| &e.name)
    }

    pub fn morphism(&self, name: &str) -> Option<&MorphismEntry> {
        find(&self.morphisms, name, |e| &e.name)
    }

    pub fn cochain(&self, name: &str) -> Option<&CochainEntry> {
        find(&self.cochains, name, |e| &e.name)
    }

    pub fn crossed_module(&self, name: &str) -> Option<&CrossedEntry> {
        find(&self.crossed_modules, name, |e| &e.name)
    }

    pub fn sequence(&self, name: &str) -> Option<&SequenceEntry> {
        find(&self.sequences, name, |e| &e.name)
    }

    pub fn extension(&self, name: &str) -> Option<&ExtensionEntry> {
        find(&self.extensions, name, |e| &e.name)
    }
}

/// Options applied while reading a document.
#[derive(Clone, Debug, Default)]
pub struct ParseOptions {
    /// Overrides the document's `field`.
    pub field: Option<Field>,
}

pub fn parse_workspace(text: &str) -> Result<Workspace, CliError> {
    parse_workspace_with(text, &ParseOptions::default())
}

pub fn parse_workspace_with(text: &str, options: &ParseOptions) -> Result<Workspace, CliError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| CliError::Parse {
        location: Location { path: "document".into(), line: Some(e.line()), column: Some(e.column()) },
        message: e.to_string(),
    })?;
    Resolver::new(text).resolve(doc, options)
}

/// Byte offset to 1-based line and column.
fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(offset, |p| offset - p - 1) + 1;
    (line, column)
}

/// Position of the object whose `"name"` key has the given value.
fn locate_name(text: &str, name: &str) -> Option<(usize, usize)> {
    let quoted = serde_json::to_string(name).ok()?;
    let mut from = 0;
    while let Some(p) = text[from..].find("\"name\"") {
        let start = from + p;
        let rest = text[start + 6..].trim_start();
        if let Some(rest) = rest.strip_prefix(':') {
            if rest.trim_start().starts_with(&quoted) {
                return Some(line_column(text, start));
            }
        }
        from = start + 6;
    }
    None
}

struct Resolver<'t> {
    text: &'t str,
    field: Field,
    names: HashSet<String>,
    ws: Workspace,
}

impl<'t> Resolver<'t> {
    fn new(text: &'t str) -> Self {
        Resolver {
            text,
            field: Field::Rational,
            names: HashSet::new(),
            ws: Workspace {
                field: Field::Rational,
                algebras: Vec::new(),
                modules: Vec::new(),
                morphisms: Vec::new(),
                cochains: Vec::new(),
                crossed_modules: Vec::new(),
                sequences: Vec::new(),
                extensions: Vec::new(),
                commands: Vec::new(),
            },
        }
    }

    fn location(&self, path: String, name: Option<&str>) -> Location {
        let (line, column) = match name.and_then(|n| locate_name(self.text, n)) {
            Some((l, c)) => (Some(l), Some(c)),
            None => (None, None),
        };
        Location { path, line, column }
    }

    fn invalid(&self, section: &str, index: usize, name: &str, message: impl ToString) -> CliError {
        CliError::Validation {
            object: name.to_string(),
            location: self.location(format!("{section}[{index}]"), Some(name)),
            message: message.to_string(),
        }
    }

    fn malformed(&self, section: &str, index: usize, name: &str, message: impl ToString) -> CliError {
        CliError::Parse {
            location: self.location(format!("{section}[{index}]"), Some(name)),
            message: format!("{name}: {}", message.to_string()),
        }
    }

    fn unresolved(&self, section: &str, index: usize, name: &str, kind: &str, reference: &str) -> CliError {
        CliError::Unresolved {
            object: name.to_string(),
            kind: kind.to_string(),
            reference: reference.to_string(),
            location: self.location(format!("{section}[{index}]"), Some(name)),
        }
    }

    fn claim(&mut self, section: &str, index: usize, name: &str) -> Result<(), CliError> {
        if name.is_empty() {
            return Err(self.malformed(section, index, name, "empty name"));
        }
        if !self.names.insert(name.to_string()) {
            return Err(self.invalid(section, index, name, "duplicate name"));
        }
        Ok(())
    }

    fn scalar(&self, section: &str, index: usize, name: &str, s: &ScalarText) -> Result<Scalar, CliError> {
        s.to_scalar(self.field).map_err(|e| self.malformed(section, index, name, e))
    }

    fn matrix(
        &self,
        section: &str,
        index: usize,
        name: &str,
        text: &MatrixText,
        rows: usize,
        cols: usize,
        what: &str,
    ) -> Result<Matrix, CliError> {
        if text.len() != rows || text.iter().any(|r| r.len() != cols) {
            return Err(self.invalid(section, index, name, format!("{what} must be a {rows}x{cols} matrix")));
        }
        let mut out = Vec::with_capacity(rows);
        for r in text {
            out.push(r.iter().map(|s| self.scalar(section, index, name, s)).collect::<Result<Vec<_>, _>>()?);
        }
        Ok(Matrix::from_rows(self.field, cols, out))
    }

    fn resolve(mut self, doc: Document, options: &ParseOptions) -> Result<Workspace, CliError> {
        self.field = match (&options.field, &doc.field) {
            (Some(f), _) => *f,
            (None, Some(text)) => text.parse().map_err(|e| CliError::Parse {
                location: self.location("field".into(), None),
                message: format!("{e}"),
            })?,
            (None, None) => Field::Rational,
        };
        self.ws.field = self.field;
        for (i, a) in doc.algebras.iter().enumerate() {
            self.algebra(i, a)?;
        }
        for (i, m) in doc.modules.iter().enumerate() {
            self.module(i, m)?;
        }
        for (i, f) in doc.morphisms.iter().enumerate() {
            self.morphism(i, f)?;
        }
        for (i, c) in doc.cochains.iter().enumerate() {
            self.cochain(i, c)?;
        }
        for (i, x) in doc.crossed_modules.iter().enumerate() {
            self.crossed(i, x)?;
        }
        for (i, s) in doc.sequences.iter().enumerate() {
            self.sequence(i, s)?;
        }
        for (i, e) in doc.extensions.iter().enumerate() {
            self.extension(i, e)?;
        }
        for (i, c) in doc.commands.iter().enumerate() {
            super::commands::check_references(&self.ws, c).map_err(|e| match e {
                CliError::Unresolved { object, kind, reference, .. } => CliError::Unresolved {
                    object,
                    kind,
                    reference,
                    location: Location { path: format!("commands[{i}]"), line: None, column: None },
                },
                CliError::Validation { object, message, .. } => CliError::Validation {
                    object,
                    message,
                    location: Location { path: format!("commands[{i}]"), line: None, column: None },
                },
                other => other,
            })?;
        }
        self.ws.commands = doc.commands;
        Ok(self.ws)
    }

    fn algebra(&mut self, i: usize, a: &AlgebraDoc) -> Result<(), CliError> {
        const S: &str = "algebras";
        self.claim(S, i, &a.name)?;
        let field = self.field;
        let value = if let Some(c) = &a.catalog {
            if a.dim.is_some() || !a.brackets.is_empty() {
                return Err(self.malformed(S, i, &a.name, "catalog algebras take no dim or brackets"));
            }
            let lie = |f: fn(Field) -> LieAlgebra| AlgebraObject::Lie(Arc::new(f(field)));
            let leib = |f: fn(Field) -> LeibnizAlgebra| AlgebraObject::Leibniz(Arc::new(f(field)));
            let v = match c.as_str() {
                "sl2" => lie(catalog::sl2),
                "heisenberg" => lie(catalog::heisenberg),
                "affine2" => lie(catalog::affine2),
                "so3" => lie(catalog::so3),
                "borel2" => lie(catalog::borel2),
                "filiform4" => lie(catalog::filiform4),
                "leibniz_square_zero" => leib(catalog::leibniz_square_zero),
                "leibniz_two_squares" => leib(catalog::leibniz_two_squares),
                "leibniz_right_affine" => leib(catalog::leibniz_right_affine),
                other => return Err(self.unresolved(S, i, &a.name, "catalog algebra", other)),
            };
            if v.kind() != a.kind {
                return Err(self.invalid(S, i, &a.name, format!("catalog algebra {c} has a different kind")));
            }
            v
        } else {
            let dim = a.dim.ok_or_else(|| self.malformed(S, i, &a.name, "missing dim"))?;
            let mut records: Vec<(usize, usize, usize, Scalar)> = Vec::new();
            for BracketDoc { i: x, j: y, k: z, value } in &a.brackets {
                records.push((*x, *y, *z, self.scalar(S, i, &a.name, value)?));
            }
            if a.kind == AlgebraKind::Lie {
                let listed: HashSet<(usize, usize, usize)> = records.iter().map(|r| (r.0, r.1, r.2)).collect();
                let mirrored: Vec<_> = records
                    .iter()
                    .filter(|r| r.0 != r.1 && !listed.contains(&(r.1, r.0, r.2)))
                    .map(|r| (r.1, r.0, r.2, -&r.3))
                    .collect();
                records.extend(mirrored);
            }
            let sc = StructureConstants::from_entries(field, dim, records).map_err(|e| self.invalid(S, i, &a.name, e))?;
            match a.kind {
                AlgebraKind::Lie => {
                    AlgebraObject::Lie(Arc::new(LieAlgebra::new(sc).map_err(|e| self.invalid(S, i, &a.name, e))?))
                }
                AlgebraKind::Leibniz => AlgebraObject::Leibniz(Arc::new(
                    LeibnizAlgebra::new(sc).map_err(|e| self.invalid(S, i, &a.name, e))?,
                )),
            }
        };
        self.ws.algebras.push(AlgebraEntry { name: a.name.clone(), value });
        Ok(())
    }

    fn action_list(
        &self,
        i: usize,
        name: &str,
        list: &Option<Vec<MatrixText>>,
        count: usize,
        dim: usize,
        what: &str,
    ) -> Result<Vec<Matrix>, CliError> {
        const S: &str = "modules";
        match list {
            None => Ok(vec![Matrix::zeros(self.field, dim, dim); count]),
            Some(l) if l.len() != count => {
                Err(self.invalid(S, i, name, format!("{what} needs one matrix per basis element ({count})")))
            }
            Some(l) => l.iter().map(|m| self.matrix(S, i, name, m, dim, dim, what)).collect(),
        }
    }

    fn module(&mut self, i: usize, m: &ModuleDoc) -> Result<(), CliError> {
        const S: &str = "modules";
        self.claim(S, i, &m.name)?;
        let alg = self
            .ws
            .algebra(&m.algebra)
            .ok_or_else(|| self.unresolved(S, i, &m.name, "algebra", &m.algebra))?
            .value
            .clone();
        let d = alg.structure().dim();
        let value = if m.adjoint {
            if m.action.is_some() || m.left.is_some() || m.right.is_some() || m.dim.is_some_and(|x| x != d) {
                return Err(self.malformed(S, i, &m.name, "adjoint modules take no actions"));
            }
            match &alg {
                AlgebraObject::Lie(a) => ModuleObject::Lie(adjoint(a)),
                AlgebraObject::Leibniz(a) => ModuleObject::Leibniz(LeibnizModule::adjoint(a)),
            }
        } else {
            let dim = m.dim.ok_or_else(|| self.malformed(S, i, &m.name, "missing dim"))?;
            match &alg {
                AlgebraObject::Lie(a) => {
                    if m.left.is_some() || m.right.is_some() {
                        return Err(self.malformed(S, i, &m.name, "modules over Lie algebras use action"));
                    }
                    let action = self.action_list(i, &m.name, &m.action, d, dim, "action")?;
                    ModuleObject::Lie(
                        Representation::new(a.clone(), dim, action).map_err(|e| self.invalid(S, i, &m.name, e))?,
                    )
                }
                AlgebraObject::Leibniz(a) => {
                    if m.action.is_some() {
                        return Err(self.malformed(S, i, &m.name, "modules over Leibniz algebras use left and right"));
                    }
                    let left = self.action_list(i, &m.name, &m.left, d, dim, "left")?;
                    let right = self.action_list(i, &m.name, &m.right, d, dim, "right")?;
                    ModuleObject::Leibniz(
                        LeibnizModule::new(a.clone(), dim, left, right).map_err(|e| self.invalid(S, i, &m.name, e))?,
                    )
                }
            }
        };
        self.ws.modules.push(ModuleEntry { name: m.name.clone(), algebra: m.algebra.clone(), value });
        Ok(())
    }

    fn morphism(&mut self, i: usize, f: &MorphismDoc) -> Result<(), CliError> {
        const S: &str = "morphisms";
        self.claim(S, i, &f.name)?;
        let src = self.ws.module(&f.source).ok_or_else(|| self.unresolved(S, i, &f.name, "module", &f.source))?;
        let tgt = self.ws.module(&f.target).ok_or_else(|| self.unresolved(S, i, &f.name, "module", &f.target))?;
        let mat = self.matrix(S, i, &f.name, &f.matrix, tgt.value.dim(), src.value.dim(), "matrix")?;
        let map = LinearMap::new(mat);
        let value = match (&src.value, &tgt.value) {
            (ModuleObject::Lie(a), ModuleObject::Lie(b)) => MorphismObject::Lie(
                ModuleMorphism::new(a.clone(), b.clone(), map).map_err(|e| self.invalid(S, i, &f.name, e))?,
            ),
            (ModuleObject::Leibniz(a), ModuleObject::Leibniz(b)) => MorphismObject::Leibniz(
                LeibnizModuleMorphism::new(a.clone(), b.clone(), map).map_err(|e| self.invalid(S, i, &f.name, e))?,
            ),
            _ => return Err(self.invalid(S, i, &f.name, "source and target are over different kinds of algebra")),
        };
        self.ws.morphisms.push(MorphismEntry {
            name: f.name.clone(),
            source: f.source.clone(),
            target: f.target.clone(),
            value,
        });
        Ok(())
    }

    fn cochain(&mut self, i: usize, c: &CochainDoc) -> Result<(), CliError> {
        const S: &str = "cochains";
        self.claim(S, i, &c.name)?;
        let module = self.ws.module(&c.module).ok_or_else(|| self.unresolved(S, i, &c.name, "module", &c.module))?;
        let flavor = match c.flavor.as_deref() {
            None => module.value.default_flavor(),
            Some(text) => parse_flavor(text).ok_or_else(|| self.malformed(S, i, &c.name, format!("unknown flavor {text:?}")))?,
        };
        let coeffs = module
            .value
            .coefficients(flavor)
            .ok_or_else(|| self.invalid(S, i, &c.name, "modules over Leibniz algebras only carry Leibniz cochains"))?;
        let (d, m) = (coeffs.algebra_dim(), coeffs.module_dim());
        let mut z = coeffs.zero_cochain(c.degree);
        for EntryDoc { tuple, value } in &c.entries {
            if tuple.len() != c.degree || tuple.iter().any(|&t| t >= d) {
                return Err(self.invalid(S, i, &c.name, format!("tuple {tuple:?} does not index a degree {} cochain", c.degree)));
            }
            if value.len() != m {
                return Err(self.invalid(S, i, &c.name, format!("value at {tuple:?} must have length {m}")));
            }
            let mut v: Vec<Scalar> = value.iter().map(|s| self.scalar(S, i, &c.name, s)).collect::<Result<_, _>>()?;
            let slot = match flavor {
                Flavor::Leibniz => tuple.clone(),
                Flavor::ChevalleyEilenberg => match sort_with_sign(tuple) {
                    None => {
                        return Err(self.invalid(S, i, &c.name, format!("alternating cochain given on repeated tuple {tuple:?}")))
                    }
                    Some((sorted, odd)) => {
                        if odd {
                            v = v.iter().map(|x| -x).collect();
                        }
                        sorted
                    }
                },
            };
            let current = z.value(&slot);
            let sum: Vec<Scalar> = current.iter().zip(&v).map(|(a, b)| a + b).collect();
            z.set(&slot, &sum);
        }
        self.ws.cochains.push(CochainEntry { name: c.name.clone(), module: c.module.clone(), value: z });
        Ok(())
    }

    fn crossed(&mut self, i: usize, x: &CrossedModuleDoc) -> Result<(), CliError> {
        const S: &str = "crossed_modules";
        self.claim(S, i, &x.name)?;
        self.ws.algebra(&x.l).ok_or_else(|| self.unresolved(S, i, &x.name, "algebra", &x.l))?;
        let v = self.ws.module(&x.v).ok_or_else(|| self.unresolved(S, i, &x.name, "module", &x.v))?;
        if v.algebra != x.l {
            return Err(self.invalid(S, i, &x.name, format!("module {} is not over {}", x.v, x.l)));
        }
        let l_dim = self.ws.algebra(&x.l).map(|a| a.value.structure().dim()).unwrap_or(0);
        let partial = LinearMap::new(self.matrix(S, i, &x.name, &x.partial, l_dim, v.value.dim(), "partial")?);
        let value = match &v.value {
            ModuleObject::Lie(rep) => {
                let cm = CrossedModule::new(rep.clone(), partial).map_err(|e| self.invalid(S, i, &x.name, e))?;
                let pair = cm.induced_pair().map_err(|e| self.invalid(S, i, &x.name, e))?;
                CrossedObject::Lie(cm, pair)
            }
            ModuleObject::Leibniz(rep) => {
                let cm = LeibnizCrossedModule::new(rep.clone(), partial).map_err(|e| self.invalid(S, i, &x.name, e))?;
                let pair = cm.induced_pair().map_err(|e| self.invalid(S, i, &x.name, e))?;
                CrossedObject::Leibniz(cm, pair)
            }
        };
        self.ws.crossed_modules.push(CrossedEntry {
            name: x.name.clone(),
            algebra: x.l.clone(),
            module: x.v.clone(),
            value,
        });
        Ok(())
    }

    fn sequence(&mut self, i: usize, s: &SequenceDoc) -> Result<(), CliError> {
        const S: &str = "sequences";
        self.claim(S, i, &s.name)?;
        let a = self.ws.morphism(&s.alpha).ok_or_else(|| self.unresolved(S, i, &s.name, "morphism", &s.alpha))?;
        let b = self.ws.morphism(&s.beta).ok_or_else(|| self.unresolved(S, i, &s.name, "morphism", &s.beta))?;
        if a.target != b.source {
            return Err(self.invalid(S, i, &s.name, "alpha and beta do not meet in one module"));
        }
        let value = match (&a.value, &b.value) {
            (MorphismObject::Lie(x), MorphismObject::Lie(y)) => SequenceObject::Lie(
                ShortExactSequence::new(x.clone(), y.clone()).map_err(|e| self.invalid(S, i, &s.name, e))?,
            ),
            (MorphismObject::Leibniz(x), MorphismObject::Leibniz(y)) => {
                let exact = x.map().is_injective()
                    && y.map().is_surjective()
                    && image(x.map()) == kernel(y.map());
                if !exact {
                    return Err(self.invalid(S, i, &s.name, "sequence is not exact"));
                }
                SequenceObject::Leibniz(x.clone(), y.clone())
            }
            _ => return Err(self.invalid(S, i, &s.name, "alpha and beta are over different kinds of algebra")),
        };
        self.ws.sequences.push(SequenceEntry {
            name: s.name.clone(),
            alpha: s.alpha.clone(),
            beta: s.beta.clone(),
            value,
        });
        Ok(())
    }

    fn lie_module(&self, i: usize, owner: &str, name: &str) -> Result<Representation, CliError> {
        const S: &str = "extensions";
        match self.ws.module(name) {
            None => Err(self.unresolved(S, i, owner, "module", name)),
            Some(ModuleEntry { value: ModuleObject::Lie(m), .. }) => Ok(m.clone()),
            Some(_) => Err(self.invalid(S, i, owner, format!("extensions are built from Lie modules; {name} is not"))),
        }
    }

    fn extension(&mut self, i: usize, e: &ExtensionDoc) -> Result<(), CliError> {
        const S: &str = "extensions";
        self.claim(S, i, &e.name)?;
        match self.ws.algebra(&e.g) {
            None => return Err(self.unresolved(S, i, &e.name, "algebra", &e.g)),
            Some(AlgebraEntry { value: AlgebraObject::Leibniz(_), .. }) => {
                return Err(self.invalid(S, i, &e.name, "extensions are defined over Lie algebras"))
            }
            Some(_) => {}
        }
        let m = self.lie_module(i, &e.name, &e.m)?;
        let base = match self.ws.crossed_module(&e.base) {
            None => return Err(self.unresolved(S, i, &e.name, "crossed module", &e.base)),
            Some(CrossedEntry { value: CrossedObject::Lie(cm, _), .. }) => cm.clone(),
            Some(_) => return Err(self.invalid(S, i, &e.name, "the base must be a Lie crossed module")),
        };
        if e.n != e.chain.len() + 2 {
            return Err(self.invalid(
                S,
                i,
                &e.name,
                format!("n = {} needs {} chain modules, found {}", e.n, e.n.saturating_sub(2), e.chain.len()),
            ));
        }
        for name in [&e.m].into_iter().chain(e.chain.iter().map(|l| &l.module)) {
            let over = self.ws.module(name).map(|x| x.algebra.clone()).unwrap_or_default();
            if over != e.g {
                return Err(self.invalid(S, i, &e.name, format!("module {name} is not over {}", e.g)));
            }
        }
        let mut chain = Vec::with_capacity(e.chain.len());
        for LinkDoc { module, .. } in &e.chain {
            chain.push(self.lie_module(i, &e.name, module)?);
        }
        let next_dims: Vec<usize> =
            chain.iter().skip(1).map(|c| c.dim()).chain(std::iter::once(base.module().dim())).collect();
        let top = chain.first().map_or(base.module().dim(), |c| c.dim());
        let head = LinearMap::new(self.matrix(S, i, &e.name, &e.f, top, m.dim(), "f")?);
        let mut maps = Vec::with_capacity(chain.len());
        for ((link, c), next) in e.chain.iter().zip(&chain).zip(&next_dims) {
            maps.push(LinearMap::new(self.matrix(S, i, &e.name, &link.partial, *next, c.dim(), "chain map")?));
        }
        let pi = LinearMap::new(self.matrix(S, i, &e.name, &e.pi, m.algebra().dim(), base.algebra().dim(), "pi")?);
        let value =
            CrossedExtension::new(m, head, chain, maps, base, pi).map_err(|err| self.invalid(S, i, &e.name, err))?;
        self.ws.extensions.push(ExtensionEntry {
            name: e.name.clone(),
            g: e.g.clone(),
            m: e.m.clone(),
            chain: e.chain.iter().map(|l| l.module.clone()).collect(),
            base: e.base.clone(),
            value,
        });
        Ok(())
    }
}

pub(crate) fn parse_flavor(text: &str) -> Option<Flavor> {
    match text {
        "ce" | "lie" => Some(Flavor::ChevalleyEilenberg),
        "leibniz" => Some(Flavor::Leibniz),
        _ => None,
    }
}

fn actions_text(list: &[Matrix]) -> Option<Vec<MatrixText>> {
    if list.iter().all(Matrix::is_zero) {
        None
    } else {
        Some(list.iter().map(matrix_to_text).collect())
    }
}

pub(crate) fn entries_text(c: &Cochain) -> Vec<EntryDoc> {
    c.entries()
        .into_iter()
        .map(|(tuple, value)| EntryDoc { tuple, value: value.iter().map(ScalarText::from_scalar).collect() })
        .collect()
}

/// The normalized document of a workspace: catalog algebras and adjoint
/// modules are spelled out, zero entries dropped, Lie brackets listed for
/// `i < j` only.
pub fn to_document(ws: &Workspace) -> Document {
    let algebras = ws
        .algebras
        .iter()
        .map(|a| {
            let sc = a.value.structure();
            let brackets = sc
                .entries()
                .filter(|(i, j, _, v)| !v.is_zero() && (a.value.kind() == AlgebraKind::Leibniz || i < j))
                .map(|(i, j, k, v)| BracketDoc { i, j, k, value: ScalarText::from_scalar(v) })
                .collect();
            AlgebraDoc { name: a.name.clone(), kind: a.value.kind(), catalog: None, dim: Some(sc.dim()), brackets }
        })
        .collect();
    let modules = ws
        .modules
        .iter()
        .map(|m| {
            let (action, left, right) = match &m.value {
                ModuleObject::Lie(r) => (actions_text(r.actions()), None, None),
                ModuleObject::Leibniz(r) => (None, actions_text(r.lefts()), actions_text(r.rights())),
            };
            ModuleDoc {
                name: m.name.clone(),
                algebra: m.algebra.clone(),
                dim: Some(m.value.dim()),
                adjoint: false,
                action,
                left,
                right,
            }
        })
        .collect();
    let morphisms = ws
        .morphisms
        .iter()
        .map(|f| MorphismDoc {
            name: f.name.clone(),
            source: f.source.clone(),
            target: f.target.clone(),
            matrix: matrix_to_text(f.value.map().matrix()),
        })
        .collect();
    let cochains = ws
        .cochains
        .iter()
        .map(|c| CochainDoc {
            name: c.name.clone(),
            module: c.module.clone(),
            degree: c.value.degree(),
            flavor: Some(c.value.flavor().to_string()),
            entries: entries_text(&c.value),
        })
        .collect();
    let crossed_modules = ws
        .crossed_modules
        .iter()
        .map(|x| CrossedModuleDoc {
            name: x.name.clone(),
            l: x.algebra.clone(),
            v: x.module.clone(),
            partial: matrix_to_text(x.value.partial().matrix()),
        })
        .collect();
    let sequences = ws
        .sequences
        .iter()
        .map(|s| SequenceDoc { name: s.name.clone(), alpha: s.alpha.clone(), beta: s.beta.clone() })
        .collect();
    let extensions = ws
        .extensions
        .iter()
        .map(|e| ExtensionDoc {
            name: e.name.clone(),
            n: e.value.n(),
            g: e.g.clone(),
            m: e.m.clone(),
            f: matrix_to_text(e.value.head().matrix()),
            chain: e
                .chain
                .iter()
                .zip(e.value.maps())
                .map(|(module, d)| LinkDoc { module: module.clone(), partial: matrix_to_text(d.matrix()) })
                .collect(),
            base: e.base.clone(),
            pi: matrix_to_text(e.value.pi().matrix()),
        })
        .collect();
    Document {
        field: Some(ws.field.to_string()),
        algebras,
        modules,
        morphisms,
        cochains,
        crossed_modules,
        extensions,
        sequences,
        commands: ws.commands.clone(),
    }
}

/// Pretty-printed normalized JSON.
pub fn serialize_workspace(ws: &Workspace) -> String {
    let mut s = serde_json::to_string_pretty(&to_document(ws)).expect("documents serialize");
    s.push('\n');
    s
}
