; monotone counter stays non-negative
(declare-var x Int)
(init (= x 0))
(trans (= x' (+ x 1)))
(good (>= x 0))
