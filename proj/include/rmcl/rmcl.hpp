#pragma once

#include "rmcl/alphabet.hpp"
#include "rmcl/automaton.hpp"
#include "rmcl/learner.hpp"
#include "rmcl/limits.hpp"
#include "rmcl/model_io.hpp"
#include "rmcl/operations.hpp"
#include "rmcl/prover.hpp"
#include "rmcl/regex.hpp"
#include "rmcl/teacher.hpp"
#include "rmcl/transducer.hpp"
