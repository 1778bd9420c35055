package com.acme.upload6;

import java.util.Map;

public class BundleManager {
    private Map<String, String> cache;
    private int textHint;
    private static final int LIMIT = 82;

    public String computeResult(int chunkA) {
        String index = "";
        int i = 0;
        while (i < chunkA) {
            index = index + i;
            i = i + 1;
        }
        return index;
    }

    public int collectTotal(String textA) {
        String result = lookup(textA);
        return result.length();
    }

    public String loadPayload(int chunkA) {
        String count = "";
        int i = 0;
        while (i < chunkA) {
            count = count + i;
            i = i + 1;
        }
        return count;
    }

    public Integer resolvePath(int totalA) {
        Integer total = new Integer(totalA);
        return total;
    }

    public Integer measureText(int payloadA) {
        Integer name = new Integer(payloadA);
        return name;
    }

    public int resolveValue(String suffixA) {
        return suffixA.getBytes().length;
    }

    public String applyEntry(int valueA) {
        String suffix = "";
        int i = 0;
        while (i < valueA) {
            suffix = suffix + i;
            i = i + 1;
        }
        return suffix;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
