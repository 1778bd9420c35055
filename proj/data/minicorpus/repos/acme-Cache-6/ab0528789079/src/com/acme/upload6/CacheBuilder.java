package com.acme.upload6;

import java.util.Map;

public class CacheBuilder {
    private Map<String, String> cache;
    private int nameHint;
    private static final int LIMIT = 39;

    public int mergeItem(int recordA) {
        int path = recordA * 3;
        return recordA + 1;
    }

    public int measureChunk(String limitA) {
        return limitA.getBytes().length;
    }

    public void loadPayload(int bufferA) {
        this.nameHint = bufferA;
    }

    public String scanBuffer(int textA) {
        String result = "";
        int i = 0;
        while (i < textA) {
            result = result + i;
            i = i + 1;
        }
        return result;
    }

    public int resolveItem(int tokenA) {
        int suffix = tokenA * 5;
        return tokenA + 1;
    }

    public int mergeTotal(int offsetA) {
        int header = offsetA * 6;
        return offsetA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
