//! C ABI over the core library: opaque graph handles, status-code returns,
//! and caller-provided buffers. Every entry point is panic-safe.
//!
//! The committed header lives at `include/alphaspectra.h`; rebuild it with
//! `cargo build -p alpha-spectra-ffi --features regen-header`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use alpha_spectra::bounds::{EvalContext, Tolerance};
use alpha_spectra::graph::Graph;
use alpha_spectra::graph6;
use alpha_spectra::invariants;
use alpha_spectra::spectra::{self, AlphaValue};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AspecStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// The input could not be parsed or violates a precondition.
    InvalidInput = 2,
    /// A numeric index or parameter is outside its valid range.
    OutOfRange = 3,
    /// An eigenvalue computation failed to converge.
    NumericFailure = 4,
    /// The caller-provided buffer is too small; retry with the reported size.
    BufferTooSmall = 5,
    /// The implementation panicked; the handle state is unchanged.
    Internal = 6,
}

/// Opaque graph handle; create with the constructors, release with
/// `aspec_graph_free`.
pub struct AspecGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn guard<F: FnOnce() -> AspecStatus>(f: F) -> AspecStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            AspecStatus::Internal
        }
    }
}

/// Copies the thread-local message for the most recent failure into `buf`
/// (NUL-terminated, truncating if needed) and reports the full length,
/// excluding the terminator, through `written`. Null `buf` with zero `len`
/// just measures.
///
/// # Safety
/// `buf` must point to `len` writable bytes when non-null; `written` must be
/// null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aspec_last_error_message(
    buf: *mut c_char,
    len: usize,
    written: *mut usize,
) -> AspecStatus {
    LAST_ERROR.with(|slot| {
        let msg = slot.borrow();
        let bytes = msg.as_bytes();
        if !written.is_null() {
            *written = bytes.len();
        }
        if buf.is_null() {
            return if len == 0 { AspecStatus::Ok } else { AspecStatus::NullArgument };
        }
        if len == 0 {
            return AspecStatus::BufferTooSmall;
        }
        let copy = bytes.len().min(len - 1);
        ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, copy);
        *buf.add(copy) = 0;
        if copy < bytes.len() {
            AspecStatus::BufferTooSmall
        } else {
            AspecStatus::Ok
        }
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs of endpoint
/// indices laid out as `u0, v0, u1, v1, ...`. On success stores a new handle
/// through `out`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable `uint32_t` values (or be
/// null when `edge_count` is zero); `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aspec_graph_from_edges(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut AspecGraph,
) -> AspecStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            set_error("null pointer argument");
            return AspecStatus::NullArgument;
        }
        let raw = if edge_count == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = raw
            .chunks_exact(2)
            .map(|pair| (pair[0] as usize, pair[1] as usize))
            .collect();
        match Graph::from_edges(n, &pairs) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(AspecGraph { inner: g }));
                AspecStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                AspecStatus::InvalidInput
            }
        }
    })
}

/// Parses a single NUL-terminated graph6 line into a new handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn aspec_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut AspecGraph,
) -> AspecStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            set_error("null pointer argument");
            return AspecStatus::NullArgument;
        }
        let Ok(line) = CStr::from_ptr(text).to_str() else {
            set_error("graph6 text is not UTF-8");
            return AspecStatus::InvalidInput;
        };
        match graph6::decode(line.trim()) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(AspecGraph { inner: g }));
                AspecStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                AspecStatus::InvalidInput
            }
        }
    })
}

/// Encodes the graph as graph6 into `buf` (NUL-terminated) and reports the
/// text length, excluding the terminator, through `written`.
///
/// # Safety
/// `g` must be a live handle; `buf` must point to `len` writable bytes when
/// non-null; `written` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aspec_graph_to_graph6(
    g: *const AspecGraph,
    buf: *mut c_char,
    len: usize,
    written: *mut usize,
) -> AspecStatus {
    guard(|| {
        let Some(handle) = g.as_ref() else {
            set_error("null graph handle");
            return AspecStatus::NullArgument;
        };
        let text = match graph6::encode(&handle.inner) {
            Ok(t) => t,
            Err(e) => {
                set_error(&e.to_string());
                return AspecStatus::InvalidInput;
            }
        };
        let bytes = text.as_bytes();
        if !written.is_null() {
            *written = bytes.len();
        }
        if buf.is_null() {
            return if len == 0 { AspecStatus::Ok } else { AspecStatus::NullArgument };
        }
        if len < bytes.len() + 1 {
            return AspecStatus::BufferTooSmall;
        }
        ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, bytes.len());
        *buf.add(bytes.len()) = 0;
        AspecStatus::Ok
    })
}

/// Releases a handle created by any constructor. Null is a no-op.
///
/// # Safety
/// `g` must be null or a pointer returned by a constructor, released at most
/// once.
#[no_mangle]
pub unsafe extern "C" fn aspec_graph_free(g: *mut AspecGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Builds the complement graph as a new handle.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aspec_graph_complement(
    g: *const AspecGraph,
    out: *mut *mut AspecGraph,
) -> AspecStatus {
    guard(|| {
        let (Some(handle), false) = (g.as_ref(), out.is_null()) else {
            set_error("null pointer argument");
            return AspecStatus::NullArgument;
        };
        *out = Box::into_raw(Box::new(AspecGraph { inner: handle.inner.complement() }));
        AspecStatus::Ok
    })
}

/// Reports the number of vertices.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aspec_graph_vertex_count(
    g: *const AspecGraph,
    out: *mut usize,
) -> AspecStatus {
    guard(|| {
        let (Some(handle), false) = (g.as_ref(), out.is_null()) else {
            set_error("null pointer argument");
            return AspecStatus::NullArgument;
        };
        *out = handle.inner.vertex_count();
        AspecStatus::Ok
    })
}

/// Reports the number of edges.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aspec_graph_edge_count(
    g: *const AspecGraph,
    out: *mut usize,
) -> AspecStatus {
    guard(|| {
        let (Some(handle), false) = (g.as_ref(), out.is_null()) else {
            set_error("null pointer argument");
            return AspecStatus::NullArgument;
        };
        *out = handle.inner.edge_count();
        AspecStatus::Ok
    })
}

/// Reports the matching number.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aspec_graph_matching_number(
    g: *const AspecGraph,
    out: *mut usize,
) -> AspecStatus {
    guard(|| {
        let (Some(handle), false) = (g.as_ref(), out.is_null()) else {
            set_error("null pointer argument");
            return AspecStatus::NullArgument;
        };
        *out = invariants::matching_number(&handle.inner);
        AspecStatus::Ok
    })
}

fn checked_alpha(alpha: f64) -> Result<AlphaValue, AspecStatus> {
    AlphaValue::new(alpha).map_err(|e| {
        set_error(&e.to_string());
        AspecStatus::OutOfRange
    })
}

/// Writes the eigenvalues of `alpha * D + (1 - alpha) * A` in descending
/// order into `buf`, which must hold at least `vertex_count` doubles; the
/// count written is reported through `written`.
///
/// # Safety
/// `g` must be a live handle; `buf` must point to `len` writable doubles;
/// `written` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aspec_spectrum(
    g: *const AspecGraph,
    alpha: f64,
    buf: *mut f64,
    len: usize,
    written: *mut usize,
) -> AspecStatus {
    guard(|| {
        let Some(handle) = g.as_ref() else {
            set_error("null graph handle");
            return AspecStatus::NullArgument;
        };
        let n = handle.inner.vertex_count();
        if !written.is_null() {
            *written = n;
        }
        if buf.is_null() {
            return if len == 0 { AspecStatus::Ok } else { AspecStatus::NullArgument };
        }
        if len < n {
            return AspecStatus::BufferTooSmall;
        }
        let a = match checked_alpha(alpha) {
            Ok(a) => a,
            Err(status) => return status,
        };
        match spectra::alpha_spectrum(&handle.inner, a) {
            Ok(spec) => {
                ptr::copy_nonoverlapping(spec.values().as_ptr(), buf, n);
                AspecStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                AspecStatus::NumericFailure
            }
        }
    })
}

/// Computes the sum of the `k` largest eigenvalues of the pencil at `alpha`.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aspec_sk(
    g: *const AspecGraph,
    alpha: f64,
    k: usize,
    out: *mut f64,
) -> AspecStatus {
    guard(|| {
        let (Some(handle), false) = (g.as_ref(), out.is_null()) else {
            set_error("null pointer argument");
            return AspecStatus::NullArgument;
        };
        let a = match checked_alpha(alpha) {
            Ok(a) => a,
            Err(status) => return status,
        };
        match spectra::sk_alpha(&handle.inner, a, k) {
            Ok(v) => {
                *out = v;
                AspecStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                AspecStatus::OutOfRange
            }
        }
    })
}

/// Computes the energy-style deviation of the pencil spectrum at `alpha`.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aspec_alpha_energy(
    g: *const AspecGraph,
    alpha: f64,
    out: *mut f64,
) -> AspecStatus {
    guard(|| {
        let (Some(handle), false) = (g.as_ref(), out.is_null()) else {
            set_error("null pointer argument");
            return AspecStatus::NullArgument;
        };
        let a = match checked_alpha(alpha) {
            Ok(a) => a,
            Err(status) => return status,
        };
        match spectra::alpha_energy(&handle.inner, a) {
            Ok(v) => {
                *out = v;
                AspecStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                AspecStatus::NumericFailure
            }
        }
    })
}

/// Computes the smallest `alpha` at which the pencil is positive
/// semidefinite, to absolute tolerance `tol` (pass 0 for the 1e-10 default).
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aspec_alpha0(
    g: *const AspecGraph,
    tol: f64,
    out: *mut f64,
) -> AspecStatus {
    guard(|| {
        let (Some(handle), false) = (g.as_ref(), out.is_null()) else {
            set_error("null pointer argument");
            return AspecStatus::NullArgument;
        };
        let tol = if tol > 0.0 { tol } else { 1e-10 };
        match spectra::alpha0(&handle.inner, tol) {
            Ok(v) => {
                *out = v;
                AspecStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                AspecStatus::NumericFailure
            }
        }
    })
}

/// Evaluates one bound-catalog entry (by its id string, e.g. `"U-3.2"`) at
/// `(alpha, k)` and serializes the full record as JSON into `buf`
/// (NUL-terminated), reporting the text length through `written`.
///
/// # Safety
/// `g` must be a live handle; `id` must be a valid NUL-terminated string;
/// `buf` must point to `len` writable bytes when non-null; `written` must be
/// null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aspec_bound_record_json(
    g: *const AspecGraph,
    id: *const c_char,
    alpha: f64,
    k: usize,
    buf: *mut c_char,
    len: usize,
    written: *mut usize,
) -> AspecStatus {
    guard(|| {
        let Some(handle) = g.as_ref() else {
            set_error("null graph handle");
            return AspecStatus::NullArgument;
        };
        if id.is_null() {
            set_error("null id");
            return AspecStatus::NullArgument;
        }
        let Ok(id_text) = CStr::from_ptr(id).to_str() else {
            set_error("id is not UTF-8");
            return AspecStatus::InvalidInput;
        };
        let Ok(catalog_id) = id_text.parse() else {
            set_error(&format!("unknown catalog id {id_text:?}"));
            return AspecStatus::InvalidInput;
        };
        let a = match checked_alpha(alpha) {
            Ok(a) => a,
            Err(status) => return status,
        };
        let ctx = EvalContext::with_tolerance(&handle.inner, Tolerance::from_env_or_default());
        let record = match ctx.evaluate(catalog_id, a, k, None) {
            Ok(r) => r,
            Err(e) => {
                set_error(&e.to_string());
                return AspecStatus::InvalidInput;
            }
        };
        let json = match serde_json::to_string(&record) {
            Ok(j) => j,
            Err(e) => {
                set_error(&e.to_string());
                return AspecStatus::Internal;
            }
        };
        let bytes = json.as_bytes();
        if !written.is_null() {
            *written = bytes.len();
        }
        if buf.is_null() {
            return if len == 0 { AspecStatus::Ok } else { AspecStatus::NullArgument };
        }
        if len < bytes.len() + 1 {
            return AspecStatus::BufferTooSmall;
        }
        ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, bytes.len());
        *buf.add(bytes.len()) = 0;
        AspecStatus::Ok
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    unsafe fn make_cycle(n: usize) -> *mut AspecGraph {
        let edges: Vec<u32> =
            (0..n).flat_map(|i| [i as u32, ((i + 1) % n) as u32]).collect();
        let mut out = ptr::null_mut();
        let status = aspec_graph_from_edges(n, edges.as_ptr(), n, &mut out);
        assert_eq!(status, AspecStatus::Ok);
        out
    }

    #[test]
    fn edges_round_trip_through_the_abi() {
        unsafe {
            let g = make_cycle(5);
            let mut n = 0usize;
            assert_eq!(aspec_graph_vertex_count(g, &mut n), AspecStatus::Ok);
            assert_eq!(n, 5);
            let mut m = 0usize;
            assert_eq!(aspec_graph_edge_count(g, &mut m), AspecStatus::Ok);
            assert_eq!(m, 5);
            let mut nu = 0usize;
            assert_eq!(aspec_graph_matching_number(g, &mut nu), AspecStatus::Ok);
            assert_eq!(nu, 2);

            let mut needed = 0usize;
            assert_eq!(
                aspec_graph_to_graph6(g, ptr::null_mut(), 0, &mut needed),
                AspecStatus::Ok
            );
            let mut buf = vec![0i8; needed + 1];
            assert_eq!(
                aspec_graph_to_graph6(g, buf.as_mut_ptr().cast(), buf.len(), &mut needed),
                AspecStatus::Ok
            );
            let text = CStr::from_ptr(buf.as_ptr().cast()).to_str().unwrap().to_string();
            let mut back = ptr::null_mut();
            let c_text = CString::new(text).unwrap();
            assert_eq!(aspec_graph_from_graph6(c_text.as_ptr(), &mut back), AspecStatus::Ok);
            let mut n2 = 0usize;
            assert_eq!(aspec_graph_vertex_count(back, &mut n2), AspecStatus::Ok);
            assert_eq!(n2, 5);
            aspec_graph_free(back);
            aspec_graph_free(g);
        }
    }

    #[test]
    fn spectral_calls_match_the_library() {
        unsafe {
            let g = make_cycle(5);
            let mut s2 = 0.0f64;
            assert_eq!(aspec_sk(g, 0.5, 2, &mut s2), AspecStatus::Ok);
            let lib = {
                let graph = alpha_spectra::graph::Family::parse("cycle:5")
                    .unwrap()
                    .build()
                    .unwrap();
                spectra::sk_alpha(&graph, AlphaValue::new(0.5).unwrap(), 2).unwrap()
            };
            assert!((s2 - lib).abs() <= 1e-12);

            let mut values = vec![0.0f64; 5];
            let mut count = 0usize;
            assert_eq!(
                aspec_spectrum(g, 0.5, values.as_mut_ptr(), values.len(), &mut count),
                AspecStatus::Ok
            );
            assert_eq!(count, 5);
            assert!((values[0] - 2.0).abs() <= 1e-9, "regular top eigenvalue is the degree");

            let mut a0 = -1.0f64;
            assert_eq!(aspec_alpha0(g, 0.0, &mut a0), AspecStatus::Ok);
            assert!((0.0..=1.0).contains(&a0));

            let mut energy = 0.0f64;
            assert_eq!(aspec_alpha_energy(g, 0.5, &mut energy), AspecStatus::Ok);
            assert!(energy >= 0.0);
            aspec_graph_free(g);
        }
    }

    #[test]
    fn status_codes_cover_misuse() {
        unsafe {
            let mut out = ptr::null_mut();
            assert_eq!(
                aspec_graph_from_edges(2, ptr::null(), 1, &mut out),
                AspecStatus::NullArgument
            );
            let bad = [0u32, 7u32];
            assert_eq!(
                aspec_graph_from_edges(2, bad.as_ptr(), 1, &mut out),
                AspecStatus::InvalidInput
            );
            let mut msg = vec![0i8; 128];
            let mut msg_len = 0usize;
            assert_eq!(
                aspec_last_error_message(msg.as_mut_ptr().cast(), msg.len(), &mut msg_len),
                AspecStatus::Ok
            );
            assert!(msg_len > 0);

            let g = make_cycle(4);
            let mut v = 0.0f64;
            assert_eq!(aspec_sk(g, 1.5, 2, &mut v), AspecStatus::OutOfRange);
            assert_eq!(aspec_sk(g, 0.5, 9, &mut v), AspecStatus::OutOfRange);
            let mut tiny = [0.0f64; 2];
            let mut count = 0usize;
            assert_eq!(
                aspec_spectrum(g, 0.5, tiny.as_mut_ptr(), tiny.len(), &mut count),
                AspecStatus::BufferTooSmall
            );
            assert_eq!(count, 4);
            aspec_graph_free(g);
            aspec_graph_free(ptr::null_mut());
        }
    }

    #[test]
    fn bound_records_serialize_through_the_abi() {
        unsafe {
            let g = make_cycle(5);
            let id = CString::new("L-5.1i").unwrap();
            let mut needed = 0usize;
            assert_eq!(
                aspec_bound_record_json(g, id.as_ptr(), 0.5, 2, ptr::null_mut(), 0, &mut needed),
                AspecStatus::Ok
            );
            let mut buf = vec![0i8; needed + 1];
            assert_eq!(
                aspec_bound_record_json(
                    g,
                    id.as_ptr(),
                    0.5,
                    2,
                    buf.as_mut_ptr().cast(),
                    buf.len(),
                    &mut needed
                ),
                AspecStatus::Ok
            );
            let text = CStr::from_ptr(buf.as_ptr().cast()).to_str().unwrap();
            let v: serde_json::Value = serde_json::from_str(text).unwrap();
            assert_eq!(v["id"], "L-5.1i");
            assert_eq!(v["applicable"], true);

            let bad_id = CString::new("Z-9.9").unwrap();
            assert_eq!(
                aspec_bound_record_json(g, bad_id.as_ptr(), 0.5, 2, ptr::null_mut(), 0, &mut needed),
                AspecStatus::InvalidInput
            );
            aspec_graph_free(g);
        }
    }
}
