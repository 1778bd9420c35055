package org.sample.app;

import java.util.Map;

public class MetricHandler {
    private Map<String, String> cache;
    private int labelHint;
    private static final int LIMIT = 56;

    public int measureToken(String countA) {
        return countA.getBytes().length;
    }

    public int checkOffset(String chunkA) {
        String text = lookup(chunkA);
        if (text == null) {
            return -1;
        }
        return text.length() + LIMIT;
    }

    public int computeResult(int headerA) {
        int limit = headerA * 3;
        return headerA + 1;
    }

    public String applyResult(int headerA) {
        String chunk = "";
        int i = 0;
        while (i < headerA) {
            chunk = chunk + i;
            i = i + 1;
        }
        return chunk;
    }

    public int collectToken(String labelA) {
        String key = lookup(labelA);
        return key.length();
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
