#pragma once

#include "sbcert/rational.hpp"
#include "sbcert/monomial.hpp"
#include "sbcert/quiver.hpp"
#include "sbcert/algebra.hpp"
#include "sbcert/element.hpp"
#include "sbcert/linalg.hpp"
#include "sbcert/module.hpp"
#include "sbcert/band_word.hpp"
#include "sbcert/band_module.hpp"
#include "sbcert/resolution.hpp"
#include "sbcert/brauer_graph.hpp"
#include "sbcert/verdict.hpp"
#include "sbcert/io/presentation_file.hpp"
#include "sbcert/fuzz.hpp"
