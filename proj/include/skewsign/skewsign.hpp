#pragma once

#include "skewsign/counterexamples.hpp"
#include "skewsign/errors.hpp"
#include "skewsign/evenrank.hpp"
#include "skewsign/field.hpp"
#include "skewsign/io.hpp"
#include "skewsign/lemma.hpp"
#include "skewsign/matrix.hpp"
#include "skewsign/recognizer.hpp"
