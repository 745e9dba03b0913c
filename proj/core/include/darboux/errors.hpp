#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace darboux {

// Base class for every mathematical/domain error raised by the library.
// Callers that need to distinguish cases catch the concrete subclasses.
struct MathError : std::runtime_error {
  explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

#define DARBOUX_DEFINE_ERROR(Name)                                   \
  struct Name : MathError {                                          \
    explicit Name(const std::string& msg = #Name) : MathError(msg) {} \
  }

DARBOUX_DEFINE_ERROR(DivisionByZero);
DARBOUX_DEFINE_ERROR(MixedContexts);
DARBOUX_DEFINE_ERROR(DualPivotFailure);
DARBOUX_DEFINE_ERROR(NotDivisible);
DARBOUX_DEFINE_ERROR(DegreeTooSmall);
DARBOUX_DEFINE_ERROR(ArityMismatch);
DARBOUX_DEFINE_ERROR(NotSquareFree);
DARBOUX_DEFINE_ERROR(ComponentAtInfinity);
DARBOUX_DEFINE_ERROR(NotFinite);
DARBOUX_DEFINE_ERROR(NotFiniteColength);
DARBOUX_DEFINE_ERROR(ComponentOnLine);
DARBOUX_DEFINE_ERROR(NotIntegralCurve);
DARBOUX_DEFINE_ERROR(CommonComponent);
DARBOUX_DEFINE_ERROR(HypothesisViolated);
DARBOUX_DEFINE_ERROR(NotEquilibrium);
DARBOUX_DEFINE_ERROR(NotCenterCandidate);
DARBOUX_DEFINE_ERROR(SquareRootUnavailable);
DARBOUX_DEFINE_ERROR(CharacteristicTooSmall);
DARBOUX_DEFINE_ERROR(PositiveDimensionalZeroSet);
DARBOUX_DEFINE_ERROR(SolveFailure);
DARBOUX_DEFINE_ERROR(ConfigError);

#undef DARBOUX_DEFINE_ERROR

// Classifies the in-flight exception; must be called from inside a catch
// block.  Returns the name of the inconclusiveness signal (the computation
// could not decide: Hilbert series did not stabilize, a square root was
// missing, a zero set was positive-dimensional, ...) or nullopt for hard
// failures and non-math exceptions.
inline std::optional<std::string> inconclusive_kind() {
  try {
    throw;
  } catch (const NotFinite&) {
    return "NotFinite";
  } catch (const NotFiniteColength&) {
    return "NotFiniteColength";
  } catch (const NotSquareFree&) {
    return "NotSquareFree";
  } catch (const SquareRootUnavailable&) {
    return "SquareRootUnavailable";
  } catch (const CharacteristicTooSmall&) {
    return "CharacteristicTooSmall";
  } catch (const PositiveDimensionalZeroSet&) {
    return "PositiveDimensionalZeroSet";
  } catch (const ComponentAtInfinity&) {
    return "ComponentAtInfinity";
  } catch (const ComponentOnLine&) {
    return "ComponentOnLine";
  } catch (const CommonComponent&) {
    return "CommonComponent";
  } catch (const HypothesisViolated&) {
    return "HypothesisViolated";
  } catch (const DualPivotFailure&) {
    return "DualPivotFailure";
  } catch (...) {
    return std::nullopt;
  }
}

// Parse error with source position (1-based line/column).
struct SyntaxError : MathError {
  int line;
  int col;
  SyntaxError(const std::string& msg, int line_, int col_)
      : MathError(msg + " (line " + std::to_string(line_) + ", col " +
                  std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

}  // namespace darboux
