#ifndef OFFEVAL_OFFEVAL_HPP
#define OFFEVAL_OFFEVAL_HPP

#include "offeval/bundle.hpp"
#include "offeval/corpus_io.hpp"
#include "offeval/ensemble.hpp"
#include "offeval/linear.hpp"
#include "offeval/metrics.hpp"
#include "offeval/mlp.hpp"
#include "offeval/pipeline.hpp"
#include "offeval/preprocess.hpp"
#include "offeval/svm.hpp"
#include "offeval/vectorizer.hpp"

#endif
