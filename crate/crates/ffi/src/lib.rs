//! C ABI for `flagvar`.
//!
//! Every fallible call returns a [`FlagvarStatus`]; on failure a message is
//! available from [`flagvar_last_error`] on the same thread. Handles are
//! opaque and must be released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use flagvar::catalog::{classify, SubmoduleRecord};
use flagvar::{EnumerationGuard, Error, FlagSpec, ParabolicFlag, Series, SimpleType};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlagvarStatus {
    Ok = 0,
    /// Null pointer or malformed argument.
    InvalidArgument = 1,
    /// Type, rank or crossing rejected by the library.
    InvalidFlag = 2,
    /// Enumeration exceeded its guard.
    GuardOverflow = 3,
    /// Index past the end of a list.
    OutOfRange = 4,
    /// A panic was caught at the boundary.
    Internal = 5,
}

/// A parabolic flag variety `G/P`.
pub struct FlagvarFlag {
    flag: ParabolicFlag,
}

/// The submodules of one flag, with their properties.
pub struct FlagvarSubmodules {
    records: Vec<SubmoduleRecord>,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FlagvarProperties {
    pub nontrivial: bool,
    pub frobenius: bool,
    pub contact: bool,
    pub first_order_nondegenerate: bool,
    /// Whether `ratio_numer / ratio_denom` is meaningful.
    pub semicanonical: bool,
    pub ratio_numer: u64,
    pub ratio_denom: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(FlagvarStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::GuardOverflow { .. } => FlagvarStatus::GuardOverflow,
            _ => FlagvarStatus::InvalidFlag,
        };
        Failure(status, e.to_string())
    }
}

fn invalid(msg: &str) -> Failure {
    Failure(FlagvarStatus::InvalidArgument, msg.to_string())
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn boundary(f: impl FnOnce() -> Result<(), Failure>) -> FlagvarStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            FlagvarStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            FlagvarStatus::Internal
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| invalid(&format!("{what} is null")))
}

unsafe fn write_out<T>(p: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        return Err(invalid(&format!("{what} is null")));
    }
    p.write(value);
    Ok(())
}

/// Copies up to `cap` items into `buf` and stores the full length in `len`.
unsafe fn write_slice<T: Copy>(
    items: &[T],
    buf: *mut T,
    cap: usize,
    len: *mut usize,
) -> Result<(), Failure> {
    write_out(len, items.len(), "len")?;
    let n = items.len().min(cap);
    if n > 0 {
        if buf.is_null() {
            return Err(invalid("buf is null"));
        }
        ptr::copy_nonoverlapping(items.as_ptr(), buf, n);
    }
    Ok(())
}

fn guard_of(cap: u64) -> Result<EnumerationGuard, Failure> {
    if cap == 0 {
        Ok(EnumerationGuard::from_env()?)
    } else {
        Ok(EnumerationGuard(cap))
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn flagvar_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a flag from a JSON descriptor such as
/// `{"factors":[{"series":"B","rank":3}],"crossed":[[3]]}`.
///
/// # Safety
/// `descriptor` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn flagvar_flag_from_json(
    descriptor: *const c_char,
    out: *mut *mut FlagvarFlag,
) -> FlagvarStatus {
    boundary(|| {
        if descriptor.is_null() {
            return Err(invalid("descriptor is null"));
        }
        let text = CStr::from_ptr(descriptor)
            .to_str()
            .map_err(|_| invalid("descriptor is not UTF-8"))?;
        let spec: FlagSpec = serde_json::from_str(text)
            .map_err(|e| Failure(FlagvarStatus::InvalidFlag, e.to_string()))?;
        let flag = spec.build()?;
        write_out(out, Box::into_raw(Box::new(FlagvarFlag { flag })), "out")
    })
}

/// Builds a flag of one simple type. `crossed` holds one-based Bourbaki nodes.
///
/// # Safety
/// `crossed` must point to `n_crossed` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn flagvar_flag_new(
    series: c_char,
    rank: usize,
    crossed: *const usize,
    n_crossed: usize,
    out: *mut *mut FlagvarFlag,
) -> FlagvarStatus {
    boundary(|| {
        let letter = char::from(series as u8).to_string();
        let series: Series = letter.parse()?;
        let ty = SimpleType::new(series, rank)?;
        if crossed.is_null() && n_crossed > 0 {
            return Err(invalid("crossed is null"));
        }
        let nodes: &[usize] = if n_crossed == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(crossed, n_crossed)
        };
        if let Some(&bad) = nodes.iter().find(|&&n| n == 0 || n > rank) {
            return Err(Error::NodeOutOfRange { node: bad, rank }.into());
        }
        let flag = FlagSpec::simple(ty, nodes).build()?;
        write_out(out, Box::into_raw(Box::new(FlagvarFlag { flag })), "out")
    })
}

/// # Safety
/// `flag` must come from a constructor in this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn flagvar_flag_free(flag: *mut FlagvarFlag) {
    if !flag.is_null() {
        drop(Box::from_raw(flag));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn flagvar_flag_dimension(
    flag: *const FlagvarFlag,
    out: *mut usize,
) -> FlagvarStatus {
    boundary(|| write_out(out, deref(flag, "flag")?.flag.dimension(), "out"))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn flagvar_flag_rank(
    flag: *const FlagvarFlag,
    out: *mut usize,
) -> FlagvarStatus {
    boundary(|| write_out(out, deref(flag, "flag")?.flag.system().rank(), "out"))
}

/// Writes the simple-root coefficients of omega. `len` receives the rank;
/// at most `cap` values are written.
///
/// # Safety
/// `buf` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn flagvar_flag_omega(
    flag: *const FlagvarFlag,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> FlagvarStatus {
    boundary(|| write_slice(deref(flag, "flag")?.flag.omega().coeffs(), buf, cap, len))
}

/// Coefficients of the noncompact positive root at `index`.
///
/// # Safety
/// `buf` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn flagvar_flag_noncompact_root(
    flag: *const FlagvarFlag,
    index: usize,
    buf: *mut i32,
    cap: usize,
    len: *mut usize,
) -> FlagvarStatus {
    boundary(|| {
        let f = &deref(flag, "flag")?.flag;
        if index >= f.dimension() {
            return Err(Failure(
                FlagvarStatus::OutOfRange,
                format!("root index {index} >= {}", f.dimension()),
            ));
        }
        write_slice(f.system().coeffs(f.noncompact_root(index)), buf, cap, len)
    })
}

/// Enumerates all submodules. `guard` caps the count; 0 uses the default
/// or the `FLAGVAR_GUARD` environment variable.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn flagvar_submodules_enumerate(
    flag: *const FlagvarFlag,
    guard: u64,
    out: *mut *mut FlagvarSubmodules,
) -> FlagvarStatus {
    boundary(|| {
        let f = &deref(flag, "flag")?.flag;
        let subs = flagvar::submodule::enumerate_submodules(f, guard_of(guard)?)?;
        let records = subs.iter().map(SubmoduleRecord::from_submodule).collect();
        write_out(
            out,
            Box::into_raw(Box::new(FlagvarSubmodules { records })),
            "out",
        )
    })
}

/// # Safety
/// `list` must come from `flagvar_submodules_enumerate`, or be null.
#[no_mangle]
pub unsafe extern "C" fn flagvar_submodules_free(list: *mut FlagvarSubmodules) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn flagvar_submodules_count(
    list: *const FlagvarSubmodules,
    out: *mut usize,
) -> FlagvarStatus {
    boundary(|| write_out(out, deref(list, "list")?.records.len(), "out"))
}

unsafe fn record<'a>(
    list: *const FlagvarSubmodules,
    index: usize,
) -> Result<&'a SubmoduleRecord, Failure> {
    let l = deref(list, "list")?;
    l.records.get(index).ok_or_else(|| {
        Failure(
            FlagvarStatus::OutOfRange,
            format!("submodule index {index} >= {}", l.records.len()),
        )
    })
}

/// Member indices (into the flag's noncompact roots) of submodule `index`.
///
/// # Safety
/// `buf` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn flagvar_submodule_members(
    list: *const FlagvarSubmodules,
    index: usize,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> FlagvarStatus {
    boundary(|| write_slice(&record(list, index)?.members, buf, cap, len))
}

/// Writes the det-weight of submodule `index`.
///
/// # Safety
/// `buf` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn flagvar_submodule_weight(
    list: *const FlagvarSubmodules,
    index: usize,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> FlagvarStatus {
    boundary(|| write_slice(record(list, index)?.weight.coeffs(), buf, cap, len))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn flagvar_submodule_properties(
    list: *const FlagvarSubmodules,
    index: usize,
    out: *mut FlagvarProperties,
) -> FlagvarStatus {
    boundary(|| {
        let r = record(list, index)?;
        let props = FlagvarProperties {
            nontrivial: r.nontrivial,
            frobenius: r.frobenius,
            contact: r.contact,
            first_order_nondegenerate: r.first_order_nondegenerate,
            semicanonical: r.ratio.is_some(),
            ratio_numer: r.ratio.map_or(0, |q| q.numer()),
            ratio_denom: r.ratio.map_or(0, |q| q.denom()),
        };
        write_out(out, props, "out")
    })
}

/// Full classification record of the flag as a JSON string, to be released
/// with `flagvar_string_free`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn flagvar_flag_classify_json(
    flag: *const FlagvarFlag,
    guard: u64,
    out: *mut *mut c_char,
) -> FlagvarStatus {
    boundary(|| {
        let f = &deref(flag, "flag")?.flag;
        let rec = classify(f, guard_of(guard)?);
        if let Some(e) = &rec.error {
            return Err(Failure(FlagvarStatus::GuardOverflow, e.clone()));
        }
        let json = serde_json::to_string(&rec)
            .map_err(|e| Failure(FlagvarStatus::Internal, e.to_string()))?;
        let c = CString::new(json).map_err(|e| Failure(FlagvarStatus::Internal, e.to_string()))?;
        write_out(out, c.into_raw(), "out")
    })
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn flagvar_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
